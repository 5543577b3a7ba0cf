"""Rational maps of the Riemann sphere in canonical (coprime, monic denominator) form."""
from typing import Any, Iterable, Optional

import numpy as np

from gaussmap_lab.algebra.points import INF, SpherePoint, as_point, is_inf
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.roots import RootCluster, roots
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import InputError, ZeroDenominator


class RationalMap:
    """num/den with den monic; exact maps are also reduced to coprime form.

    Numeric maps are only made monic: a gcd of floating polynomials is not
    well defined, so constructors are expected to pass coprime data.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    # construction
    @classmethod
    def of(cls, num: Any, den: Any = 1) -> "RationalMap":
        return normalize(_as_poly(num), _as_poly(den))

    @classmethod
    def constant(cls, value: Any) -> "RationalMap":
        return normalize(Poly.constant(value), Poly.constant(1))

    @classmethod
    def identity(cls) -> "RationalMap":
        return normalize(Poly.x(), Poly.constant(1))

    @classmethod
    def moebius(cls, a: Any, b: Any, c: Any, d: Any) -> "RationalMap":
        return normalize(Poly([b, a]), Poly([d, c]))

    # properties
    @property
    def is_exact(self) -> bool:
        return self.num.is_exact and self.den.is_exact

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def degree(self) -> int:
        """max(deg num, deg den); 0 for constants, including the zero map."""
        dn = -1 if self.num.is_zero else self.num.degree
        return max(dn, self.den.degree, 0)

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def order_at_infinity(self) -> int:
        """ord of R at ∞ in the chart w = 1/z: deg den − deg num."""
        if self.num.is_zero:
            raise InputError("the zero map has infinite order everywhere")
        return self.den.degree - self.num.degree

    # arithmetic
    def _coerce(self, other: Any) -> "RationalMap":
        if isinstance(other, RationalMap):
            return other
        if isinstance(other, Poly):
            return normalize(other, Poly.constant(1))
        return RationalMap.constant(other)

    def __add__(self, other: Any) -> "RationalMap":
        other = self._coerce(other)
        return normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalMap":
        return RationalMap(-self.num, self.den)

    def __sub__(self, other: Any) -> "RationalMap":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "RationalMap":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "RationalMap":
        other = self._coerce(other)
        return normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RationalMap":
        other = self._coerce(other)
        if other.num.is_zero:
            raise ZeroDenominator("division by the zero map")
        return normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Any) -> "RationalMap":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "RationalMap":
        if exponent < 0:
            return RationalMap.constant(1) / (self ** (-exponent))
        return normalize(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def derivative(self) -> "RationalMap":
        return normalize(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def wronskian(self) -> Poly:
        """num'·den − num·den'; its zeros are the finite critical points."""
        return self.num.derivative() * self.den - self.num * self.den.derivative()

    # composition
    def compose(self, inner: "RationalMap") -> "RationalMap":
        """self ∘ inner, homogenized with the degree of self."""
        d = max(self.num.degree if not self.num.is_zero else 0, self.den.degree)

        def homogenize(p: Poly) -> Poly:
            total = Poly()
            for k, c in enumerate(p.coeffs):
                total = total + (inner.num ** k) * (inner.den ** (d - k)) * c
            return total

        return normalize(homogenize(self.num), homogenize(self.den))

    def infinity_chart(self) -> "RationalMap":
        """R(1/w) as a rational map in w."""
        dn = 0 if self.num.is_zero else self.num.degree
        dd = self.den.degree
        d = max(dn, dd)
        return normalize(self.num.reversed(d) if not self.num.is_zero else Poly(), self.den.reversed(d))

    # evaluation
    def __call__(self, p: Any) -> SpherePoint:
        return self.eval(p)

    def eval(self, p: Any) -> SpherePoint:
        p = as_point(p)
        if is_inf(p):
            if self.num.is_zero:
                return self.num.coefficient(0)
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return self.num.coefficient(0) * 0
            return self.num.leading / self.den.leading
        denominator = self.den(p)
        if not denominator or self._near_pole(p, denominator):
            return INF
        return self.num(p) / denominator

    def _near_pole(self, p: SpherePoint, denominator: Any) -> bool:
        """Float points where den(p) vanishes up to rounding of the coefficients."""
        if self.den.is_exact and isinstance(p, ExactComplex):
            return False
        scale = self.den.norm() * (1.0 + abs(complex(p))) ** self.den.degree
        return abs(complex(denominator)) <= settings.ROOT_TOL * scale

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Vectorized evaluation at finite points; poles give inf entries."""
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.num.evaluate(z) / self.den.evaluate(z)

    def poles(self, tol: Optional[float] = None) -> list[RootCluster]:
        """Finite poles with their orders."""
        return roots(self.den, tol)

    def zeros(self, tol: Optional[float] = None) -> list[RootCluster]:
        if self.num.is_zero:
            raise InputError("the zero map vanishes everywhere")
        return roots(self.num, tol)

    def to_json(self) -> dict[str, Any]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self) -> str:
        return f"RationalMap({self.num!r} / {self.den!r})"


def _as_poly(value: Any) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (list, tuple)):
        return Poly(value)
    return Poly.constant(value)


def normalize(num: Poly, den: Poly) -> RationalMap:
    """Canonical form: coprime (exact mode) with a monic denominator."""
    if den.is_zero:
        raise ZeroDenominator("denominator is the zero polynomial")
    if num.is_zero:
        return RationalMap(Poly(), Poly.constant(1 if den.is_exact else 1.0))
    if num.is_exact and den.is_exact:
        common = num.gcd(den)
        if not common.is_constant:
            num = num.exact_div(common)
            den = den.exact_div(common)
    lead = den.leading
    return RationalMap(num.scale(1 / lead), den.scale(1 / lead))


def rational(num: Iterable[Any], den: Iterable[Any] = (1,)) -> RationalMap:
    return normalize(Poly(num), Poly(den))


__all__ = ["RationalMap", "normalize", "rational"]
