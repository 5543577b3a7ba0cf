"""Omitted and totally ramified values of a map on a punctured sphere."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gaussmap_lab.algebra.points import SpherePoint, chordal_distance, is_inf, same_point
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import TolTooCoarse
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.sphere.ramification import FiberPoint, critical_points, fiber

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RamifiedValue:
    value: SpherePoint
    order: int
    fiber: tuple[FiberPoint, ...]
    branching: int

    @property
    def weight(self) -> Fraction:
        return 1 - Fraction(1, self.order)


@dataclass(frozen=True)
class OmittedValue:
    value: SpherePoint
    fiber: tuple[FiberPoint, ...]

    @property
    def bracket(self) -> list[int]:
        return sorted((p.multiplicity for p in self.fiber), reverse=True)


@dataclass(frozen=True)
class TotallyRamifiedReport:
    degree: int
    n_punctures: int
    omitted: tuple[OmittedValue, ...]
    ramified: tuple[RamifiedValue, ...]
    total_branching: int
    candidates: int = 0
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def D(self) -> int:
        return len(self.omitted)

    @property
    def R(self) -> int:
        return len(self.ramified)

    @property
    def S(self) -> int:
        return sum(r.order for r in self.ramified)

    @property
    def nu(self) -> Fraction:
        return self.D + sum((r.weight for r in self.ramified), Fraction(0))

    def order_of(self, value: SpherePoint, tol: float = 1e-9) -> Optional[int]:
        """ν of a non-omitted totally ramified value, None when it is not one."""
        for r in self.ramified:
            if same_point(r.value, value, tol):
                return r.order
        return None

    def is_omitted(self, value: SpherePoint, tol: float = 1e-9) -> bool:
        return any(same_point(o.value, value, tol) for o in self.omitted)


def _in_puncture(point: FiberPoint, dom: PuncturedSphere) -> bool:
    tol = max(settings.POINT_MATCH_TOL, 2.0 * point.radius)
    return dom.match(point.point, tol) is not None


def _values_close(v: SpherePoint, w: SpherePoint, tol: float) -> bool:
    if isinstance(v, ExactComplex) and isinstance(w, ExactComplex):
        return v == w
    if is_inf(v) or is_inf(w) or max(abs(complex(v)), abs(complex(w))) > 1.0 / tol:
        return chordal_distance(v, w) < tol
    return abs(complex(v) - complex(w)) < tol * (1.0 + abs(complex(v)))


def candidate_values(g: RationalMap, dom: PuncturedSphere, tol: float) -> list[SpherePoint]:
    """Critical values and images of punctures, identified up to tol."""
    raw = [g.eval(p) for p, _ in critical_points(g)] + [g.eval(p) for p in dom.punctures]
    values: list[SpherePoint] = []
    for v in raw:
        match = next((w for w in values if _values_close(v, w, tol)), None)
        if match is not None:
            # keep the exact representative when one is available
            if isinstance(v, ExactComplex) and not isinstance(match, ExactComplex):
                values[values.index(match)] = v
            continue
        near = next((w for w in values if _values_close(v, w, 10 * tol)), None)
        if near is not None:
            raise TolTooCoarse(
                "two candidate values are closer than 10·tol",
                first=str(v),
                second=str(near),
                tol=tol,
            )
        values.append(v)
    return values


def tr_report(g: RationalMap, dom: PuncturedSphere, tol: Optional[float] = None) -> TotallyRamifiedReport:
    """Omitted values and totally ramified values of g restricted to Σ = C̄ ∖ punctures.

    A value is omitted when its whole fiber sits on punctures; it is totally
    ramified when every fiber point inside Σ has multiplicity ≥ 2, with ν the
    smallest of those multiplicities.
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    values = candidate_values(g, dom, tol)

    omitted: list[OmittedValue] = []
    ramified: list[RamifiedValue] = []
    for v in values:
        points = tuple(fiber(g, v, tol))
        inside = [p for p in points if not _in_puncture(p, dom)]
        if not inside:
            omitted.append(OmittedValue(v, points))
            continue
        order = min(p.multiplicity for p in inside)
        if order >= 2:
            branching = sum(p.multiplicity - 1 for p in points)
            ramified.append(RamifiedValue(v, order, points, branching))

    report = TotallyRamifiedReport(
        degree=g.degree,
        n_punctures=dom.n,
        omitted=tuple(omitted),
        ramified=tuple(ramified),
        total_branching=2 * g.degree - 2,
        candidates=len(values),
    )
    logger.debug(
        "tr report",
        extra={"degree": report.degree, "D": report.D, "R": report.R, "nu": str(report.nu)},
    )
    return report


__all__ = [
    "OmittedValue",
    "RamifiedValue",
    "TotallyRamifiedReport",
    "candidate_values",
    "tr_report",
]
