"""Weierstrass data (g, ω = h dz) on a punctured sphere and the null form α."""
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from gaussmap_lab.algebra.points import INF, SpherePoint, is_inf
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap, normalize
from gaussmap_lab.algebra.roots import RootCluster, roots
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import Degenerate, InputError
from gaussmap_lab.sphere.domain import PuncturedSphere

_HALF = ExactComplex(1, 0) / 2
_HALF_I = ExactComplex(0, 1) / 2


@dataclass(frozen=True)
class OneForm:
    """ω = h(z) dz in the affine chart."""

    h: RationalMap

    def __post_init__(self) -> None:
        if self.h.is_zero:
            raise InputError("ω must not vanish identically")

    def order_at(self, p: SpherePoint) -> int:
        """ord_p ω; at ∞ through w = 1/z, dz = −dw/w²."""
        if is_inf(p):
            return self.h.den.degree - self.h.num.degree - 2
        return _cluster_order(self.h.num, p) - _cluster_order(self.h.den, p)


def _matching(clusters: list[RootCluster], p: SpherePoint) -> int:
    target = complex(p)  # type: ignore[arg-type]
    total = 0
    for c in clusters:
        tol = max(settings.POINT_MATCH_TOL * (1.0 + abs(target)), 2.0 * c.radius)
        if abs(c.center - target) <= tol:
            total += c.multiplicity
    return total


def _cluster_order(P: Poly, p: SpherePoint) -> int:
    if P.is_constant:
        return 0
    if P.is_exact and isinstance(p, ExactComplex):
        return P.order_at(p)
    return _matching(roots(P), p)


def pole_order(g: RationalMap, p: SpherePoint) -> int:
    """m_p: pole order of g at p, 0 when g(p) is finite."""
    if is_inf(p):
        return max(0, g.num.degree - g.den.degree) if not g.num.is_zero else 0
    return _cluster_order(g.den, p)


@dataclass(frozen=True)
class WeierstrassData:
    g: RationalMap
    omega: OneForm
    dom: PuncturedSphere

    def __post_init__(self) -> None:
        if self.g.is_constant:
            raise Degenerate("the Gauss map must be nonconstant")
        for p in self.interior_poles():
            raise InputError(f"ω has a pole at {p}, which is not a puncture", point=str(p))

    @classmethod
    def of(cls, g: RationalMap, h: RationalMap, punctures: Any) -> "WeierstrassData":
        dom = punctures if isinstance(punctures, PuncturedSphere) else PuncturedSphere(tuple(punctures))
        return cls(g=g, omega=OneForm(h), dom=dom)

    @property
    def h(self) -> RationalMap:
        return self.omega.h

    def interior_poles(self) -> list[SpherePoint]:
        found: list[SpherePoint] = []
        if not self.h.den.is_constant:
            for c in roots(self.h.den):
                if self.dom.contains(c.location, max(settings.POINT_MATCH_TOL, 2.0 * c.radius)):
                    found.append(c.location)
        if not self.dom.has_infinity and self.omega.order_at(INF) < 0:
            found.append(INF)
        return found


@dataclass(frozen=True)
class AlphaForm:
    """α = ½(1 − g², i(1 + g²), 2g) ω, stored as the three dz coefficients."""

    a1: RationalMap
    a2: RationalMap
    a3: RationalMap

    @property
    def components(self) -> tuple[RationalMap, RationalMap, RationalMap]:
        return self.a1, self.a2, self.a3

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Shape (3, *z.shape) array of the coefficients at finite points."""
        return np.stack([a.evaluate(z) for a in self.components])

    def null_defect(self, samples: Optional[np.ndarray] = None) -> float:
        """|a1² + a2² + a3²|; exactly 0 for exact data, sampled otherwise."""
        if all(a.is_exact for a in self.components):
            total = self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
            return 0.0 if total.is_zero else float("inf")
        if samples is None:
            samples = np.exp(1j * np.linspace(0.1, 6.0, 7)) * np.linspace(0.3, 2.7, 7)
        values = self.evaluate(samples)
        return float(np.max(np.abs(np.sum(values * values, axis=0))))


def alpha(data: WeierstrassData) -> AlphaForm:
    G0, G1 = data.g.num, data.g.den
    square = G1 * G1
    quotient, remainder = divmod(data.h.num, square)
    exact_cancel = remainder.is_zero or (
        not remainder.is_exact and remainder.norm() <= 1e-9 * data.h.num.norm()
    )
    if exact_cancel:
        # h already carries the double zeros at the poles of g
        numerators = (
            (square - G0 * G0) * quotient,
            (square + G0 * G0) * quotient,
            G0 * G1 * quotient,
        )
        den = data.h.den
    else:
        numerators = (
            (square - G0 * G0) * data.h.num,
            (square + G0 * G0) * data.h.num,
            G0 * G1 * data.h.num,
        )
        den = square * data.h.den
    a1 = normalize(numerators[0].scale(_HALF), den)
    a2 = normalize(numerators[1].scale(_HALF_I), den)
    a3 = normalize(numerators[2], den)
    return AlphaForm(a1, a2, a3)


__all__ = ["AlphaForm", "OneForm", "WeierstrassData", "alpha", "pole_order"]
