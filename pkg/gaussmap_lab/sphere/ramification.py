"""Local degrees, fibers and the branch divisor of a rational map."""
import logging
from dataclasses import dataclass
from typing import Any, Optional

from gaussmap_lab.algebra.points import INF, SpherePoint, as_point, is_inf
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.roots import RootCluster, roots
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import Degenerate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberPoint:
    point: SpherePoint
    multiplicity: int
    radius: float = 0.0


@dataclass(frozen=True)
class BranchPoint:
    point: SpherePoint
    e: int
    value: SpherePoint


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    branch_points: tuple[BranchPoint, ...]

    @property
    def total_branching(self) -> int:
        return sum(bp.e - 1 for bp in self.branch_points)

    @property
    def critical_values(self) -> list[SpherePoint]:
        return [bp.value for bp in self.branch_points]


def _require_nonconstant(g: RationalMap) -> None:
    if g.is_constant:
        raise Degenerate("map is constant")


def _order(P: Poly, p: SpherePoint, tol: float) -> int:
    if P.is_exact and isinstance(p, ExactComplex):
        return P.order_at(p)
    return P.order_at(p, tol)


def multiplicity_at(g: RationalMap, p: Any, tol: Optional[float] = None) -> int:
    """e_p: order of g − g(p) at p, in the chart w = 1/z at ∞ and for 1/g at poles."""
    _require_nonconstant(g)
    tol = settings.DEFAULT_TOL if tol is None else tol
    p = as_point(p)
    if is_inf(p):
        return multiplicity_at(g.infinity_chart(), ExactComplex(0), tol)
    value = g.eval(p)
    if is_inf(value):
        return _order(g.den, p, tol)
    return _order(g.num - g.den.scale(value), p, tol)


def _clean(P: Poly, tol: float) -> Poly:
    return P.trim(tol) if not P.is_exact else P


def fiber(g: RationalMap, v: Any, tol: Optional[float] = None) -> list[FiberPoint]:
    """g⁻¹(v) with multiplicities; they sum to deg g."""
    _require_nonconstant(g)
    tol = settings.DEFAULT_TOL if tol is None else tol
    v = as_point(v)
    d = g.degree
    if is_inf(v):
        P = g.den
    else:
        P = _clean(g.num - g.den.scale(v), tol)
        if P.is_zero:
            raise Degenerate("map is constant", value=str(v))

    points = [FiberPoint(c.location, c.multiplicity, c.radius) for c in _finite_roots(P, tol)]
    at_infinity = d - (P.degree if not P.is_zero else 0)
    if at_infinity > 0:
        points.append(FiberPoint(INF, at_infinity))
    return points


def _finite_roots(P: Poly, tol: Optional[float] = None) -> list[RootCluster]:
    if P.is_zero or P.degree == 0:
        return []
    return roots(P, cluster_tol=tol)


def critical_points(g: RationalMap) -> list[tuple[SpherePoint, int]]:
    """Points with e_p ≥ 2 as (point, e_p)."""
    _require_nonconstant(g)
    W = _clean(g.wronskian(), settings.ROOT_TOL)
    found = [(c.location, c.multiplicity + 1) for c in _finite_roots(W)]
    e_inf = multiplicity_at(g, INF)
    if e_inf >= 2:
        found.append((INF, e_inf))
    return found


def ramification_profile(g: RationalMap) -> RamificationProfile:
    branch = tuple(BranchPoint(p, e, g.eval(p)) for p, e in critical_points(g))
    profile = RamificationProfile(degree=g.degree, branch_points=branch)
    expected = 2 * g.degree - 2
    if profile.total_branching != expected:
        logger.warning(
            "branching total disagrees with Riemann–Hurwitz",
            extra={"total_branching": profile.total_branching, "expected": expected},
        )
    return profile


__all__ = [
    "BranchPoint",
    "FiberPoint",
    "RamificationProfile",
    "critical_points",
    "fiber",
    "multiplicity_at",
    "ramification_profile",
]
