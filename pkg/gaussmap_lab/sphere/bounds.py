"""Upper bounds for totally ramified values of maps on punctured spheres."""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from gaussmap_lab.sphere.report import TotallyRamifiedReport

Number = Union[int, Fraction]


@dataclass(frozen=True)
class BoundResult:
    name: str
    lhs: Number
    rhs: Number
    applicable: bool = True
    strict: bool = False

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return True
        return self.lhs < self.rhs if self.strict else self.lhs <= self.rhs

    @property
    def slack(self) -> Fraction:
        return Fraction(self.rhs) - Fraction(self.lhs)

    @property
    def sharp(self) -> bool:
        return self.applicable and self.slack == 0


@dataclass(frozen=True)
class BoundCheck:
    degree: int
    results: tuple[BoundResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def violations(self) -> list[BoundResult]:
        return [r for r in self.results if not r.holds]

    def get(self, name: str) -> BoundResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def c_nu(d: int, nu: int) -> int:
    """Least branching a value of order ν forces in a degree-d fiber: d − ⌊d/ν⌋."""
    return d - d // nu


def branching_total(d: int, genus: int = 0) -> int:
    """B_g = −χ + 2d."""
    return 2 * genus - 2 + 2 * d


def check_bounds(
    report: TotallyRamifiedReport,
    genus: int = 0,
    n_punctures: Optional[int] = None,
    minimal_surface: bool = False,
) -> BoundCheck:
    d = report.degree
    n = report.n_punctures if n_punctures is None else n_punctures
    B = branching_total(d, genus)
    D, R, S, nu = report.D, report.R, report.S, report.nu
    nonlinear = d >= 2
    cap = (d * B) // (d - 1) if nonlinear else 0

    results = [
        BoundResult("two_r_le_s", 2 * R, S),
        BoundResult("s_le_branching", S, cap, applicable=nonlinear),
        BoundResult("s_le_2d", S, 2 * d, applicable=genus == 0),
        BoundResult("nu_le_d_plus_quarter", nu, D + Fraction(cap, 4), applicable=nonlinear),
        BoundResult("r_le_branching", R, B // math.ceil(d / 2) if d >= 1 else 0, applicable=nonlinear),
        BoundResult("surjective_nu_le_2", nu, 2, applicable=D == 0 and 2 <= d <= 4),
        BoundResult("degree_two_nu_le_2", nu, 2, applicable=d == 2 and D <= 1),
    ]

    for k, value in enumerate(report.ramified):
        if not nonlinear:
            break
        need = c_nu(d, value.order)
        results.append(BoundResult(f"fiber_branching[{k}]", need, value.branching))
        results.append(BoundResult(f"order_vs_branching[{k}]", value.order * (d - 1), d * need))

    if minimal_surface:
        # ends bound; 1/R = (γ − 1 + n/2)/d
        inverse_r = (genus - 1 + Fraction(n, 2)) / d
        results.append(BoundResult("ends_nu_bound", nu, 2 + 2 * inverse_r))
        results.append(BoundResult("ends_nu_lt_4", nu, 4, strict=True))
        results.append(BoundResult("ends_d_le_nu", D, nu))
        results.append(BoundResult("omitted_le_3", D, 3))
        if genus == 0:
            results.append(BoundResult("genus_zero_nu_lt_3", nu, 3, strict=True))
            results.append(BoundResult("genus_zero_d_le_2", D, 2))
    else:
        results.append(BoundResult("ends_nu_bound", nu, 0, applicable=False))

    return BoundCheck(degree=d, results=tuple(results))


__all__ = ["BoundCheck", "BoundResult", "branching_total", "c_nu", "check_bounds"]
