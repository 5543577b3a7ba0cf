"""Canonical degree-4 maps G = φ ∘ g, normalized so the omitted values sit at 0 and 1."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from gaussmap_lab.algebra.points import INF, SpherePoint, point_label, same_point
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import I, ExactComplex, Scalar
from gaussmap_lab.core.exceptions import Degenerate, StructuralViolation
from gaussmap_lab.families.base import Expected, FamilyBase, Params
from gaussmap_lab.sphere.allocation import AllocationPattern, classify_allocation
from gaussmap_lab.sphere.moebius import cross_ratio
from gaussmap_lab.sphere.ramification import FiberPoint, fiber
from gaussmap_lab.sphere.report import tr_report

logger = logging.getLogger(__name__)

_ZERO = ExactComplex(0)
_ONE = ExactComplex(1)
_MATCH_TOL = 1e-9

Quadruple = tuple[SpherePoint, SpherePoint, SpherePoint, SpherePoint]


def _with_multiplicity(points: list[FiberPoint], m: int) -> list[SpherePoint]:
    return [p.point for p in points if p.multiplicity == m]


def _single(points: list[SpherePoint], clause: str) -> SpherePoint:
    if len(points) != 1:
        raise StructuralViolation(clause, found=[point_label(p) for p in points])
    return points[0]


def _pair(points: list[SpherePoint], clause: str) -> tuple[SpherePoint, SpherePoint]:
    if len(points) != 2:
        raise StructuralViolation(clause, found=[point_label(p) for p in points])
    return points[0], points[1]


def _equal(value: Scalar, target: Scalar) -> bool:
    if isinstance(value, ExactComplex) and isinstance(target, ExactComplex):
        return value == target
    return abs(complex(value) - complex(target)) <= _MATCH_TOL * (1.0 + abs(complex(target)))


class CanonicalFamily(FamilyBase):
    canonical = True
    param_names = ()
    punctures = (INF, I, -I, _ZERO)
    expected = Expected(D=2, R=1, nu=Fraction(5, 2))
    omitted: tuple[SpherePoint, ...] = (_ZERO, _ONE)
    case: Optional[str] = None
    brackets: Optional[dict[str, list[int]]] = None
    expected_cross_ratio: Scalar = ExactComplex(-1)

    def check_infinity(self, G: RationalMap) -> tuple[FiberPoint, ...]:
        """G⁻¹(∞) consists of two double poles lying inside Σ."""
        points = fiber(G, INF)
        if sorted(p.multiplicity for p in points) != [2, 2]:
            raise StructuralViolation("infinity_fiber", multiplicities=[p.multiplicity for p in points])
        dom = self.domain()
        for p in points:
            if not dom.contains(p.point, max(_MATCH_TOL, 2.0 * p.radius)):
                raise StructuralViolation("infinity_fiber", end=point_label(p.point))
        return tuple(points)

    def quadruple(self, G: RationalMap) -> Quadruple:
        raise NotImplementedError


class CanonicalCaseOne(CanonicalFamily):
    """G = 1/(2z² + 1)²: 0 at ∞ with multiplicity 4, 1 at 0 (double) and ±i."""

    id = "canon-g111"
    title = "case 1 canonical map"
    case = "case1"

    def gauss_map(self, params: Params) -> RationalMap:
        return RationalMap.of(Poly.constant(1), Poly([1, 0, 2]) ** 2)

    def quadruple(self, G: RationalMap) -> Quadruple:
        zeros, ones = fiber(G, _ZERO), fiber(G, _ONE)
        p0 = _single(_with_multiplicity(zeros, 4), "cross_ratio")
        p1 = _single(_with_multiplicity(ones, 2), "cross_ratio")
        s1, s2 = _pair(_with_multiplicity(ones, 1), "cross_ratio")
        return p0, p1, s1, s2


class CanonicalCaseTwo(CanonicalFamily):
    """G = 512i(z − i)/(z² + 10iz + 23)²; G(−17i) = 1 with multiplicity 1."""

    id = "canon-g211"
    title = "case 2 canonical map"
    punctures = (INF, I, -I, ExactComplex(0, -17))
    case = "case2"
    expected_cross_ratio = ExactComplex(9)

    def gauss_map(self, params: Params) -> RationalMap:
        return RationalMap.of(Poly([-I, 1]).scale(512 * I), Poly([23, 10 * I, 1]) ** 2)

    def quadruple(self, G: RationalMap) -> Quadruple:
        zeros, ones = fiber(G, _ZERO), fiber(G, _ONE)
        p3 = _single(_with_multiplicity(zeros, 3), "cross_ratio")
        p1 = _single(_with_multiplicity(zeros, 1), "cross_ratio")
        s3 = _single(_with_multiplicity(ones, 3), "cross_ratio")
        s1 = _single(_with_multiplicity(ones, 1), "cross_ratio")
        return p3, p1, s3, s1


class CanonicalCaseFour(CanonicalFamily):
    """G = −4z²/(z² − 1)²: every end is a double point of 0 or 1."""

    id = "canon-g42"
    title = "case 4 canonical map"
    case = "case4"

    def gauss_map(self, params: Params) -> RationalMap:
        return RationalMap.of(Poly.monomial(2, -4), Poly([-1, 0, 1]) ** 2)

    def quadruple(self, G: RationalMap) -> Quadruple:
        q1, q2 = _pair([p.point for p in fiber(G, INF)], "cross_ratio")
        r1, r2 = _pair(_with_multiplicity(fiber(G, _ONE), 2), "cross_ratio")
        return q1, q2, r1, r2


class CanonicalSingleOmitted(CanonicalFamily):
    """G = ((z − 1)/(z + 1))⁴: 1 is omitted, 0 and ∞ are each attained once with multiplicity 4."""

    id = "canon-gd1"
    title = "one-omitted-value canonical map"
    expected = Expected(D=1, R=2, nu=Fraction(5, 2))
    omitted = (_ONE,)
    brackets = {"1": [1, 1, 1, 1]}

    def gauss_map(self, params: Params) -> RationalMap:
        return RationalMap.of(Poly([-1, 1]) ** 4, Poly([1, 1]) ** 4)

    def check_infinity(self, G: RationalMap) -> tuple[FiberPoint, ...]:
        poles, zeros = fiber(G, INF), fiber(G, _ZERO)
        for points, at, clause in ((poles, -1, "infinity_fiber"), (zeros, 1, "zero_fiber")):
            if len(points) != 1 or points[0].multiplicity != 4 or not same_point(points[0].point, ExactComplex(at), _MATCH_TOL):
                raise StructuralViolation(clause, found=[(point_label(p.point), p.multiplicity) for p in points])
        return tuple(poles)

    def quadruple(self, G: RationalMap) -> Quadruple:
        """The pairing of the four simple points of G⁻¹(1) that is harmonic."""
        points = [p.point for p in fiber(G, _ONE)]
        if len(points) != 4:
            raise StructuralViolation("cross_ratio", found=[point_label(p) for p in points])
        a, b, c, d = points
        pairings = [(a, b, c, d), (a, c, b, d), (a, d, b, c)]
        for q in pairings:
            if _equal(cross_ratio(*q), self.expected_cross_ratio):
                return q
        return pairings[0]


@dataclass(frozen=True)
class CanonicalReport:
    id: str
    degree: int
    omitted: tuple[SpherePoint, ...]
    infinity_fiber: tuple[FiberPoint, ...]
    pattern: AllocationPattern
    quadruple: Quadruple
    cross_ratio: Scalar
    clauses: tuple[str, ...]


def verify_canonical(family: CanonicalFamily) -> CanonicalReport:
    """Degree, omitted set, fiber over ∞, allocation case and cross-ratio, in that order."""
    G = family.gauss_map({})
    dom = family.domain()
    passed: list[str] = []

    if G.degree != 4:
        raise StructuralViolation("degree", degree=G.degree)
    passed.append("degree")

    report = tr_report(G, dom)
    omitted = tuple(v.value for v in report.omitted)
    expected = family.omitted
    if len(omitted) != len(expected) or not all(
        any(same_point(v, w, _MATCH_TOL) for v in omitted) for w in expected
    ):
        raise StructuralViolation("omitted", found=[point_label(v) for v in omitted])
    passed.append("omitted")

    infinity = family.check_infinity(G)
    passed.append("infinity_fiber")

    pattern = classify_allocation(G, dom, expected)
    if family.brackets is not None:
        if pattern.brackets != family.brackets:
            raise StructuralViolation("allocation", brackets=pattern.brackets)
    elif pattern.case != family.case:
        raise StructuralViolation("allocation", brackets=pattern.brackets, case=pattern.case)
    passed.append("allocation")

    quadruple = family.quadruple(G)
    try:
        value = cross_ratio(*quadruple)
    except Degenerate as exc:
        raise StructuralViolation("cross_ratio", detail=exc.detail) from exc
    if not _equal(value, family.expected_cross_ratio):
        raise StructuralViolation("cross_ratio", value=str(value), expected=str(family.expected_cross_ratio))
    passed.append("cross_ratio")

    logger.debug("canonical form verified", extra={"family": family.id, "cross_ratio": str(value)})
    return CanonicalReport(
        id=family.id,
        degree=G.degree,
        omitted=omitted,
        infinity_fiber=infinity,
        pattern=pattern,
        quadruple=quadruple,
        cross_ratio=value,
        clauses=tuple(passed),
    )


canon_g111 = CanonicalCaseOne()
canon_g211 = CanonicalCaseTwo()
canon_g42 = CanonicalCaseFour()
canon_gd1 = CanonicalSingleOmitted()

__all__ = [
    "CanonicalCaseFour",
    "CanonicalCaseOne",
    "CanonicalCaseTwo",
    "CanonicalFamily",
    "CanonicalReport",
    "CanonicalSingleOmitted",
    "canon_g111",
    "canon_g211",
    "canon_g42",
    "canon_gd1",
    "verify_canonical",
]
