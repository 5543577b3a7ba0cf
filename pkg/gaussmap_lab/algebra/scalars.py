"""Complex scalars: exact Gaussian rationals and finite floating complex numbers."""
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

from gaussmap_lab.core.exceptions import InputError, NonFiniteValue

RationalLike = Union[int, Fraction]


@dataclass(frozen=True, slots=True, eq=False)
class ExactComplex:
    """re + i·im with arbitrary-precision rational parts.

    Fraction keeps denominators positive and in lowest terms.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _fraction(self.re))
        object.__setattr__(self, "im", _fraction(self.im))

    @classmethod
    def coerce(cls, value: Any) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls(Fraction(value))
        raise InputError(f"cannot represent {value!r} exactly", value=value)

    # arithmetic
    def __add__(self, other: Any) -> "Scalar":
        if _is_rational(other):
            other = ExactComplex.coerce(other)
        if isinstance(other, ExactComplex):
            return ExactComplex(self.re + other.re, self.im + other.im)
        if isinstance(other, (complex, float)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __pos__(self) -> "ExactComplex":
        return self

    def __sub__(self, other: Any) -> "Scalar":
        if _is_rational(other) or isinstance(other, ExactComplex):
            return self + (-ExactComplex.coerce(other))
        if isinstance(other, (complex, float)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other: Any) -> "Scalar":
        return (-self) + other

    def __mul__(self, other: Any) -> "Scalar":
        if _is_rational(other):
            other = ExactComplex.coerce(other)
        if isinstance(other, ExactComplex):
            return ExactComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (complex, float)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "ExactComplex":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Any) -> "Scalar":
        if _is_rational(other):
            other = ExactComplex.coerce(other)
        if isinstance(other, ExactComplex):
            return self * other.reciprocal()
        if isinstance(other, (complex, float)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "Scalar":
        if _is_rational(other):
            return ExactComplex.coerce(other) * self.reciprocal()
        if isinstance(other, (complex, float)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, exponent: int) -> "ExactComplex":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # comparisons and conversions
    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ExactComplex):
            return self.re == other.re and self.im == other.im
        if _is_rational(other):
            return self.im == 0 and self.re == other
        if isinstance(other, (complex, float)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def __repr__(self) -> str:
        return f"ExactComplex({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_pair(self) -> list[str]:
        return [str(self.re), str(self.im)]


Scalar = Union[ExactComplex, complex]


def _fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError("booleans are not scalars")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise InputError(f"exact component must be rational, got {value!r}", value=value)


def _is_rational(value: Any) -> bool:
    return isinstance(value, (int, Rational)) and not isinstance(value, bool)


ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)


def is_exact(value: Any) -> bool:
    return isinstance(value, ExactComplex) or _is_rational(value)


def exact(value: Any, im: Any = 0) -> ExactComplex:
    if im:
        return ExactComplex(_fraction(value), _fraction(im))
    return ExactComplex.coerce(value)


def approx(value: Any) -> complex:
    """Float mirror of a scalar. Non-finite results are rejected."""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteValue(f"non-finite complex value {z!r}")
    return z


def as_scalar(value: Any) -> Scalar:
    if isinstance(value, ExactComplex):
        return value
    if _is_rational(value):
        return ExactComplex.coerce(value)
    return approx(value)


def is_zero(value: Scalar, tol: float = 0.0) -> bool:
    if isinstance(value, ExactComplex):
        return not value
    return abs(value) <= tol


__all__ = [
    "ExactComplex",
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "approx",
    "as_scalar",
    "exact",
    "is_exact",
    "is_zero",
]
