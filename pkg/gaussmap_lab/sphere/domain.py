from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from gaussmap_lab.algebra.points import SpherePoint, as_point, is_inf, point_json, same_point
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import InputError


@dataclass(frozen=True)
class PuncturedSphere:
    """C̄ minus finitely many distinct points."""

    punctures: tuple[SpherePoint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        points = tuple(as_point(p) for p in self.punctures)
        object.__setattr__(self, "punctures", points)
        for k, p in enumerate(points):
            for q in points[k + 1:]:
                if same_point(p, q, 10 * settings.DEFAULT_TOL):
                    raise InputError(f"punctures {p} and {q} coincide", first=str(p), second=str(q))

    @classmethod
    def of(cls, points: Iterable[Any]) -> "PuncturedSphere":
        return cls(tuple(points))

    @property
    def n(self) -> int:
        return len(self.punctures)

    @property
    def has_infinity(self) -> bool:
        return any(is_inf(p) for p in self.punctures)

    @property
    def finite(self) -> list[SpherePoint]:
        return [p for p in self.punctures if not is_inf(p)]

    def match(self, point: SpherePoint, tol: Optional[float] = None) -> Optional[SpherePoint]:
        """The puncture at `point`, if any."""
        tol = settings.POINT_MATCH_TOL if tol is None else tol
        for p in self.punctures:
            if same_point(p, point, tol):
                return p
        return None

    def contains(self, point: SpherePoint, tol: Optional[float] = None) -> bool:
        """True when `point` lies in Σ, i.e. is not a puncture."""
        return self.match(point, tol) is None

    def to_json(self) -> list[Any]:
        return [point_json(p) for p in self.punctures]


def sphere_minus(*points: Any) -> PuncturedSphere:
    return PuncturedSphere(tuple(points))


__all__ = ["PuncturedSphere", "sphere_minus"]
