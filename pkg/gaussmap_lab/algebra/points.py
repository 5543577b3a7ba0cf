"""Points of the Riemann sphere: finite scalars plus a single point at infinity."""
import math
from typing import Any, Union

from gaussmap_lab.algebra.scalars import ExactComplex, as_scalar


class Infinity:
    _instance = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "∞"

    def __reduce__(self) -> str:
        return "INF"

    def __hash__(self) -> int:
        return hash("gaussmap-lab-infinity")

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Infinity)


INF = Infinity()

SpherePoint = Union[ExactComplex, complex, Infinity]


def is_inf(point: Any) -> bool:
    return isinstance(point, Infinity)


def as_point(value: Any) -> SpherePoint:
    if is_inf(value):
        return INF
    if isinstance(value, str) and value.strip().lower() in {"inf", "infinity", "∞"}:
        return INF
    return as_scalar(value)


def chordal_distance(p: SpherePoint, q: SpherePoint) -> float:
    """Distance on the unit sphere; bounded by 2 and finite at ∞."""
    if is_inf(p) and is_inf(q):
        return 0.0
    if is_inf(p):
        p, q = q, p
    a = complex(p)
    if is_inf(q):
        return 2.0 / math.sqrt(1.0 + abs(a) ** 2)
    b = complex(q)
    return 2.0 * abs(a - b) / math.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))


def same_point(p: SpherePoint, q: SpherePoint, tol: float = 0.0) -> bool:
    """Exact equality for exact points, tol·(1+|p|) closeness otherwise."""
    if is_inf(p) or is_inf(q):
        if is_inf(p) and is_inf(q):
            return True
        finite = q if is_inf(p) else p
        return tol > 0 and abs(complex(finite)) > 1.0 / tol
    if isinstance(p, ExactComplex) and isinstance(q, ExactComplex):
        return p == q
    a, b = complex(p), complex(q)
    return abs(a - b) <= tol * (1.0 + abs(a))


def point_json(point: SpherePoint) -> Any:
    if is_inf(point):
        return "inf"
    if isinstance(point, ExactComplex):
        return point.to_pair()
    z = complex(point)
    return [z.real, z.imag]


def point_label(point: SpherePoint) -> str:
    if is_inf(point):
        return "inf"
    if isinstance(point, ExactComplex):
        return str(point)
    z = complex(point)
    return f"{z.real:.12g}{z.imag:+.12g}i"


__all__ = [
    "INF",
    "Infinity",
    "SpherePoint",
    "as_point",
    "chordal_distance",
    "is_inf",
    "point_json",
    "point_label",
    "same_point",
]

