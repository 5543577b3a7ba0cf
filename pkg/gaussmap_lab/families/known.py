"""Two earlier examples with ν_g = 5/2: a three-ended genus-zero surface and a four-ended one."""
from fractions import Fraction
from typing import Optional

from gaussmap_lab.algebra.points import INF
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import I, ExactComplex, Scalar
from gaussmap_lab.families.base import Expected, FamilyBase, Params, close, distinct, is_imaginary, is_real, nonzero

_ONE = ExactComplex(1)


def _negative_real(value: Scalar) -> bool:
    return is_real(value) and complex(value).real < 0


class ThreeEndedFamily(FamilyBase):
    """g = σ(z² + 1 + a(t−1))/(z² + t), ω = (z² + t)²/(z² + 1)² dz on C̄ ∖ {±i, ∞}."""

    id = "ms"
    title = "three-ended genus-zero surface, degree 2"
    param_names = ("a", "t", "sigma")
    punctures = (I, -I, INF)
    expected = Expected(D=2, R=1, nu=Fraction(5, 2), curvature=-8)
    example = {"a": -1, "t": 0, "sigma": "i*sqrt(3/5)"}

    @staticmethod
    def sigma_squared(a: Scalar, t: Scalar) -> Scalar:
        return (t + 3) / (a * ((t - 1) * a + 4))

    def check(self, params: Params) -> None:
        a, t, sigma = params["a"], params["t"], params["sigma"]
        if not (is_real(a) and is_real(t)):
            raise self.fail("a and t are real")
        if not nonzero(a):
            raise self.fail("a ≠ 0")
        if not (distinct(a, _ONE) and distinct(t, _ONE)):
            raise self.fail("(a − 1)(t − 1) ≠ 0")
        if not nonzero(a * ((t - 1) * a + 4)):
            raise self.fail("a((t − 1)a + 4) ≠ 0")
        target = self.sigma_squared(a, t)
        if not _negative_real(target):
            raise self.fail("(t + 3)/(a((t − 1)a + 4)) < 0")
        if not close(sigma * sigma, target):
            raise self.fail("σ² = (t + 3)/(a((t − 1)a + 4))")

    def gauss_map(self, params: Params) -> RationalMap:
        a, t, sigma = params["a"], params["t"], params["sigma"]
        num = Poly([1 + a * (t - 1), 0, 1]).scale(sigma)
        return RationalMap.of(num, Poly([t, 0, 1]))

    def omega(self, params: Params) -> Optional[RationalMap]:
        t = params["t"]
        return RationalMap.of(Poly([t, 0, 1]) ** 2, Poly([1, 0, 1]) ** 2)


class FourEndedFamily(FamilyBase):
    """Degree-4 map with omitted values σ, σa and a double value σb at ±√2 i, on C̄ ∖ {0, ±i, ∞}."""

    id = "kw"
    title = "four-ended genus-zero surface, degree 4"
    param_names = ("a", "b", "sigma")
    punctures = (ExactComplex(0), I, -I, INF)
    expected = Expected(D=2, R=1, nu=Fraction(5, 2), curvature=-16)
    example = {"a": 0, "b": 2, "sigma": "i*sqrt(3/5)"}

    @staticmethod
    def sigma_squared(a: Scalar, b: Scalar) -> Scalar:
        return (5 * a + 11 * b - 16) / (16 * a * b - 11 * a - 5 * b)

    @staticmethod
    def denominator(a: Scalar, b: Scalar) -> Poly:
        return Poly([4 * (b - 1), 0, 4 * (b - 1), 0, b - a])

    def check(self, params: Params) -> None:
        a, b, sigma = params["a"], params["b"], params["sigma"]
        if not (is_real(a) and is_real(b)):
            raise self.fail("a, b ∈ R")
        if not (distinct(a, _ONE) and distinct(b, _ONE)):
            raise self.fail("a, b ≠ 1")
        if not distinct(a, b):
            raise self.fail("a ≠ b")
        if not is_imaginary(sigma):
            raise self.fail("σ ∈ iR")
        if not nonzero(16 * a * b - 11 * a - 5 * b):
            raise self.fail("16ab − 11a − 5b ≠ 0")
        target = self.sigma_squared(a, b)
        if not _negative_real(target):
            raise self.fail("(5a + 11b − 16)/(16ab − 11a − 5b) < 0")
        if not close(sigma * sigma, target):
            raise self.fail("σ² = (5a + 11b − 16)/(16ab − 11a − 5b)")

    def gauss_map(self, params: Params) -> RationalMap:
        a, b, sigma = params["a"], params["b"], params["sigma"]
        c = 4 * a * (b - 1)
        num = Poly([c, 0, c, 0, b - a]).scale(sigma)
        return RationalMap.of(num, self.denominator(a, b))

    def omega(self, params: Params) -> Optional[RationalMap]:
        den = self.denominator(params["a"], params["b"])
        return RationalMap.of(den * den, Poly.monomial(2) * Poly([1, 0, 1]) ** 2)


ms = ThreeEndedFamily()
kw = FourEndedFamily()

__all__ = ["FourEndedFamily", "ThreeEndedFamily", "kw", "ms"]
