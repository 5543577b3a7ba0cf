"""Residues of R(z)dz: Laurent coefficients at exact poles, trapezoid contours otherwise."""
import logging
import math
from typing import Any, Literal, Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint, as_point, is_inf, same_point
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap, normalize
from gaussmap_lab.algebra.roots import roots
from gaussmap_lab.algebra.scalars import ZERO, ExactComplex, Scalar
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import ContourTooLarge, NotAPole, Unsupported

logger = logging.getLogger(__name__)

Mode = Literal["auto", "exact", "numeric"]


def pole_order(R: RationalMap, p: Any) -> int:
    """Pole order of R at a finite point (0 when R is regular there)."""
    p = as_point(p)
    if R.den.is_exact and isinstance(p, ExactComplex):
        return R.den.order_at(p)
    return R.den.order_at(p, settings.POINT_MATCH_TOL)


def laurent_coefficient(R: RationalMap, p: ExactComplex, k: int = -1) -> Scalar:
    """Coefficient of (z−p)^k in the Laurent expansion of R at p.

    Needs an exact denominator so the pole order is decided exactly; the
    numerator may be numeric, in which case the result is a complex float.
    """
    if not R.den.is_exact:
        raise Unsupported("Laurent expansion needs an exact denominator")
    m = R.den.order_at(p)
    if k < -m:
        return ZERO if R.num.is_exact else 0j
    q = R.den.exact_div(Poly([-p, 1]) ** m).shift(p)
    n = R.num.shift(p)
    target = k + m
    zero = ZERO if (n.is_exact and q.is_exact) else 0j
    inv_q0 = 1 / q.coefficient(0)
    series: list[Scalar] = []
    for j in range(target + 1):
        acc = n.coefficient(j) + zero
        for i in range(1, j + 1):
            qi = q.coefficient(i)
            if qi:
                acc = acc - qi * series[j - i]
        series.append(acc * inv_q0)
    return series[target]


def _not_a_pole(R: RationalMap, p: SpherePoint, strict: Optional[bool]) -> Scalar:
    strict = settings.RESIDUE_STRICT if strict is None else strict
    if strict:
        raise NotAPole(f"{p} is not a pole", point=str(p))
    logger.debug("residue requested at a regular point", extra={"point": str(p)})
    return ZERO if R.is_exact else 0j


def contour_residue(
    R: RationalMap,
    p: Any,
    nodes: Optional[int] = None,
    radius: Optional[float] = None,
) -> complex:
    """(1/2πi)∮R dz on |z−p| = r with the N-node trapezoid rule.

    r defaults to half the distance to the nearest other pole, capped at 1.
    """
    center = complex(as_point(p))
    nodes = settings.CONTOUR_NODES if nodes is None else nodes
    others = [
        c for c in roots(R.den) if not same_point(c.location, center, settings.POINT_MATCH_TOL)
    ] if not R.den.is_constant else []
    nearest = min((abs(c.center - center) for c in others), default=math.inf)
    if radius is None:
        radius = min(nearest / 2.0, 1.0)
    elif nearest < 2.0 * radius:
        raise ContourTooLarge(
            f"another pole lies within {2.0 * radius:g} of {center}",
            radius=radius,
            nearest=nearest,
        )
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    offsets = radius * np.exp(1j * theta)
    values = R.evaluate(center + offsets)
    return complex(np.mean(values * offsets))


def _infinity_form(R: RationalMap) -> RationalMap:
    """R(1/w)/w², the coefficient of −dw for R dz in the chart at ∞."""
    chart = R.infinity_chart()
    return normalize(chart.num, chart.den * Poly.monomial(2))


def residue(
    R: RationalMap,
    p: Any,
    mode: Mode = "auto",
    nodes: Optional[int] = None,
    radius: Optional[float] = None,
    strict: Optional[bool] = None,
) -> Scalar:
    """Residue of the 1-form R(z)dz at a sphere point.

    "exact" expands in a Laurent series at an exact p, "numeric" integrates
    on a circle, "auto" picks exact whenever the data allow it.
    """
    p = as_point(p)
    if is_inf(p):
        value = residue(_infinity_form(R), ZERO, mode=mode, nodes=nodes, radius=radius, strict=strict)
        return -value

    can_expand = R.den.is_exact and isinstance(p, ExactComplex)
    if mode == "exact" and not can_expand:
        raise Unsupported("exact residues need an exact pole location and denominator", point=str(p))
    if mode == "exact" or (mode == "auto" and can_expand):
        if R.den.order_at(p) == 0:
            return _not_a_pole(R, p, strict)
        return laurent_coefficient(R, p, -1)  # type: ignore[arg-type]

    if pole_order(R, p) == 0:
        return _not_a_pole(R, p, strict)
    return contour_residue(R, p, nodes=nodes, radius=radius)


def residue_sum(R: RationalMap, mode: Mode = "auto") -> Scalar:
    """Sum of the residues of R dz over every pole, ∞ included; zero by the residue theorem."""
    total: Scalar = ZERO if R.is_exact else 0j
    if not R.den.is_constant:
        for cluster in roots(R.den):
            location = cluster.location
            if mode == "exact" and not isinstance(location, ExactComplex):
                raise Unsupported("pole is not an exact rational point", point=str(location))
            point_mode: Mode = mode if isinstance(location, ExactComplex) else "numeric"
            total = total + residue(R, location, mode=point_mode, strict=False)
    return total + residue(R, "inf", mode=mode, strict=False)


__all__ = [
    "contour_residue",
    "laurent_coefficient",
    "pole_order",
    "residue",
    "residue_sum",
]
