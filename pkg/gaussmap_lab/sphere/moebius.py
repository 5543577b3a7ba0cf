"""Möbius transformations and cross-ratios in homogeneous coordinates."""
from dataclasses import dataclass
from typing import Any

from gaussmap_lab.algebra.points import INF, SpherePoint, as_point, is_inf, same_point
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import ONE, ZERO, Scalar, as_scalar
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import Degenerate


def _homogeneous(point: SpherePoint) -> tuple[Scalar, Scalar]:
    if is_inf(point):
        return ONE, ZERO
    return as_scalar(point), ONE


def _det(p: tuple[Scalar, Scalar], q: tuple[Scalar, Scalar]) -> Scalar:
    return p[0] * q[1] - q[0] * p[1]


def _from_homogeneous(x: Scalar, y: Scalar) -> SpherePoint:
    if not y:
        return INF
    return x / y


@dataclass(frozen=True)
class MoebiusMap:
    """z ↦ (az + b)/(cz + d) with ad − bc ≠ 0."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not self.determinant:
            raise Degenerate("Möbius coefficients have ad − bc = 0")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_points(cls, z1: Any, z2: Any, z3: Any) -> "MoebiusMap":
        """The map sending z1, z2, z3 to 0, 1, ∞."""
        s, t, b = (_homogeneous(as_point(z)) for z in (z1, z2, z3))
        if not _det(s, t) or not _det(t, b) or not _det(s, b):
            raise Degenerate("three-point normalization needs distinct points")
        k1 = _det(t, b)
        k2 = _det(t, s)
        return cls(s[1] * k1, -s[0] * k1, b[1] * k2, -b[0] * k2)

    @property
    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def __call__(self, z: Any) -> SpherePoint:
        return self.apply(z)

    def apply(self, z: Any) -> SpherePoint:
        x, y = _homogeneous(as_point(z))
        return _from_homogeneous(self.a * x + self.b * y, self.c * x + self.d * y)

    def compose(self, inner: "MoebiusMap") -> "MoebiusMap":
        """self ∘ inner."""
        return MoebiusMap(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def as_rational(self) -> RationalMap:
        return RationalMap.moebius(self.a, self.b, self.c, self.d)

    def approx_equal(self, other: "MoebiusMap", tol: float = 1e-12) -> bool:
        """Equality as transformations, i.e. up to a common scalar factor."""
        mine = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        theirs = [complex(v) for v in (other.a, other.b, other.c, other.d)]
        k = max(range(4), key=lambda j: abs(mine[j]))
        if abs(theirs[k]) == 0:
            return False
        ratio = mine[k] / theirs[k]
        scale = max(abs(v) for v in mine)
        return all(abs(m - ratio * t) <= tol * scale for m, t in zip(mine, theirs))


def mobius_apply(M: MoebiusMap, z: Any) -> SpherePoint:
    return M.apply(z)


def canonical_phi(sigma: Any, tau: Any, b: Any) -> MoebiusMap:
    """Φ with Φ(σ) = 0, Φ(τ) = 1, Φ(b) = ∞."""
    return MoebiusMap.from_points(sigma, tau, b)


def cross_ratio(z1: Any, z2: Any, z3: Any, z4: Any) -> SpherePoint:
    """[z1, z2; z3, z4] = (z1−z3)/(z1−z4) · (z2−z4)/(z2−z3), ∞ included."""
    points = [as_point(z) for z in (z1, z2, z3, z4)]
    distinct: list[SpherePoint] = []
    for p in points:
        if not any(same_point(p, q, settings.POINT_MATCH_TOL) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise Degenerate("cross-ratio needs at least three distinct points")
    h1, h2, h3, h4 = (_homogeneous(p) for p in points)
    return _from_homogeneous(_det(h1, h3) * _det(h2, h4), _det(h1, h4) * _det(h2, h3))


__all__ = ["MoebiusMap", "canonical_phi", "cross_ratio", "mobius_apply"]
