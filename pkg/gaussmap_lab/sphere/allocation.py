"""Multiplicities of omitted values over the ends (bracket notation 0:[4], 1:[2,1,1])."""
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from gaussmap_lab.algebra.points import as_point, point_label
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.core.exceptions import NotOmitted
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.sphere.ramification import fiber

# brackets for the two omitted values of a degree-4 map with four ends
CASES: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "case1": ((4,), (2, 1, 1)),
    "case2": ((3, 1), (3, 1)),
    "case3": ((3, 1), (2, 2)),
    "case4": ((2, 2), (2, 2)),
}


@dataclass(frozen=True)
class AllocationPattern:
    brackets: dict[str, list[int]]
    case: Optional[str]

    def to_json(self) -> dict[str, list[int]]:
        return dict(self.brackets)


def match_case(brackets: list[tuple[int, ...]]) -> Optional[str]:
    if len(brackets) != 2:
        return None
    first, second = brackets
    for name, pattern in CASES.items():
        if (first, second) == pattern or (second, first) == pattern:
            return name
    return None


def classify_allocation(G: RationalMap, dom: PuncturedSphere, values: Iterable[Any]) -> AllocationPattern:
    """Sorted end multiplicities of each listed value, matched against the four cases."""
    brackets: dict[str, list[int]] = {}
    ordered: list[tuple[int, ...]] = []
    for value in values:
        value = as_point(value)
        multiplicities = []
        for point in fiber(G, value):
            tol = max(1e-6, 2.0 * point.radius)
            if dom.match(point.point, tol) is None:
                raise NotOmitted(point_label(value), point_label(point.point))
            multiplicities.append(point.multiplicity)
        bracket = sorted(multiplicities, reverse=True)
        brackets[point_label(value)] = bracket
        ordered.append(tuple(bracket))
    return AllocationPattern(brackets=brackets, case=match_case(ordered))


__all__ = ["CASES", "AllocationPattern", "classify_allocation", "match_case"]
