"""Seeded random maps and the bound suite run over them."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint, same_point
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap, normalize
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.exceptions import GaussmapError
from gaussmap_lab.sphere.bounds import BoundCheck, check_bounds
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.sphere.ramification import critical_points, fiber
from gaussmap_lab.sphere.report import TotallyRamifiedReport, tr_report
from gaussmap_lab.tasks.worker import parallel_map

logger = logging.getLogger(__name__)

KINDS = ("generic", "power", "moebius_power", "square_composition", "chebyshev")


@dataclass(frozen=True)
class SuiteCase:
    index: int
    kind: str
    g: RationalMap
    dom: PuncturedSphere


@dataclass(frozen=True)
class SuiteOutcome:
    case: SuiteCase
    report: Optional[TotallyRamifiedReport] = None
    check: Optional[BoundCheck] = None
    error: Optional[str] = None

    @property
    def violations(self) -> list[str]:
        if self.check is None:
            return []
        return [r.name for r in self.check.violations]


@dataclass
class SuiteResult:
    seed: int
    outcomes: list[SuiteOutcome] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.outcomes)

    @property
    def skipped(self) -> list[SuiteOutcome]:
        return [o for o in self.outcomes if o.error is not None]

    @property
    def violations(self) -> list[tuple[int, str]]:
        return [(o.case.index, name) for o in self.outcomes for name in o.violations]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def max_surjective_nu(self) -> Fraction:
        values = [
            o.report.nu
            for o in self.outcomes
            if o.report is not None and o.report.D == 0 and o.report.degree <= 4
        ]
        return max(values, default=Fraction(0))

    @property
    def sharp(self) -> list[tuple[int, str]]:
        return [
            (o.case.index, r.name)
            for o in self.outcomes
            if o.check is not None
            for r in o.check.results
            if r.sharp
        ]


def _gaussian(rng: np.random.Generator, bound: int = 3) -> ExactComplex:
    re, im = rng.integers(-bound, bound + 1, size=2)
    return ExactComplex(int(re), int(im))


def _random_poly(rng: np.random.Generator, degree: int) -> Poly:
    coeffs = [_gaussian(rng) for _ in range(degree)]
    lead = _gaussian(rng)
    while not lead:
        lead = _gaussian(rng)
    return Poly(coeffs + [lead])


def _chebyshev(d: int) -> Poly:
    previous, current = Poly.constant(1), Poly.x()
    for _ in range(d - 1):
        previous, current = current, Poly([0, 2]) * current - previous
    return current if d >= 1 else previous


def random_map(rng: np.random.Generator, degree: int, kind: str) -> RationalMap:
    """A map of exactly the requested degree; generic draws are retried until coprime."""
    if kind == "power":
        return RationalMap.of(Poly.monomial(degree))
    if kind == "chebyshev":
        return RationalMap.of(_chebyshev(degree))
    if kind == "moebius_power":
        while True:
            a, b, c, d = (_gaussian(rng, 2) for _ in range(4))
            if a * d - b * c:
                break
        outer = RationalMap.moebius(a, b, c, d)
        return outer.compose(RationalMap.of(Poly.monomial(degree)))
    if kind == "square_composition" and degree % 2 == 0:
        inner = random_map(rng, degree // 2, "generic")
        return inner.compose(RationalMap.of(Poly.monomial(2)))
    while True:
        num = _random_poly(rng, int(rng.integers(0, degree + 1)))
        den = _random_poly(rng, degree)
        if rng.random() < 0.5:
            num, den = den, num
        g = normalize(num, den)
        if g.degree == degree:
            return g


def random_punctures(rng: np.random.Generator, g: RationalMap, count: int) -> PuncturedSphere:
    """Whole fibers of critical values first, then generic points with small Gaussian-rational coordinates.

    A fiber of a critical value is punctured entirely or not at all.
    """
    points: list[SpherePoint] = []
    critical_values = [g.eval(p) for p, _ in critical_points(g)]
    if count and rng.random() < 0.6:
        values = list(critical_values)
        rng.shuffle(values)
        for v in values:
            pts = [fp.point for fp in fiber(g, v)]
            if len(points) + len(pts) > count:
                continue
            if any(_near(p, q) for p in pts for q in points):
                continue
            points.extend(pts)
    while len(points) < count:
        candidate = ExactComplex(Fraction(int(rng.integers(-9, 10)), 4), Fraction(int(rng.integers(-9, 10)), 4))
        if any(_near(candidate, q) for q in points):
            continue
        # generic points stay off the fibers of critical values
        if not any(_near(g.eval(candidate), v) for v in critical_values):
            points.append(candidate)
    return PuncturedSphere(tuple(points))


def _near(p: SpherePoint, q: SpherePoint) -> bool:
    return same_point(p, q, 1e-6)


def generate_cases(count: int, seed: int, max_degree: int = 6, max_punctures: int = 4) -> list[SuiteCase]:
    rng = np.random.default_rng(seed)
    cases = []
    for index in range(count):
        degree = int(rng.integers(2, max_degree + 1))
        kind = KINDS[int(rng.integers(0, len(KINDS)))]
        g = random_map(rng, degree, kind)
        dom = random_punctures(rng, g, int(rng.integers(0, max_punctures + 1)))
        cases.append(SuiteCase(index=index, kind=kind, g=g, dom=dom))
    return cases


def run_case(case: SuiteCase) -> SuiteOutcome:
    try:
        report = tr_report(case.g, case.dom)
    except GaussmapError as exc:
        logger.warning("suite case skipped", extra={"index": case.index, "error": exc.code})
        return SuiteOutcome(case=case, error=exc.code)
    return SuiteOutcome(case=case, report=report, check=check_bounds(report))


def bound_suite(
    count: int = 200,
    seed: int = 0,
    max_degree: int = 6,
    max_punctures: int = 4,
    threads: Optional[int] = None,
) -> SuiteResult:
    cases = generate_cases(count, seed, max_degree, max_punctures)
    result = SuiteResult(seed=seed, outcomes=parallel_map(run_case, cases, threads))
    logger.info(
        "bound suite finished",
        extra={"count": result.count, "violations": len(result.violations), "skipped": len(result.skipped)},
    )
    return result


__all__ = [
    "SuiteCase",
    "SuiteOutcome",
    "SuiteResult",
    "bound_suite",
    "generate_cases",
    "random_map",
    "random_punctures",
    "run_case",
]
