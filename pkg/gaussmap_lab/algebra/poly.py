"""Dense univariate polynomials, coefficients lowest degree first."""
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from gaussmap_lab.algebra.scalars import ONE, ZERO, ExactComplex, Scalar, as_scalar, is_exact
from gaussmap_lab.core.exceptions import InputError, Unsupported, ZeroPolynomialError


class Poly:
    """Immutable polynomial over ExactComplex (exact) or complex (numeric).

    A single inexact coefficient turns the whole polynomial numeric. The zero
    polynomial is flagged by `is_zero`; asking for its degree raises.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        values = [as_scalar(c) for c in coeffs]
        if not all(isinstance(c, ExactComplex) for c in values):
            values = [complex(c) for c in values]
        # only exact zeros are stripped; use trim() for numeric cancellation
        while values and not values[-1]:
            values.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(values)

    # constructors
    @classmethod
    def constant(cls, value: Any) -> "Poly":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, coeff: Any = 1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Any], leading: Any = 1) -> "Poly":
        result = cls.constant(leading)
        for root in roots:
            result = result * cls([-as_scalar(root), 1])
        return result

    # properties
    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, ExactComplex) for c in self.coeffs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO if self.is_exact else 0j

    def norm(self) -> float:
        return float(sum(abs(complex(c)) for c in self.coeffs))

    # arithmetic
    def _coerce(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.constant(other)

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Poly()
        zero = ZERO if (self.is_exact and other.is_exact) else 0j
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise InputError("polynomial powers must be non-negative integers")
        result, base = Poly.constant(ONE if self.is_exact else 1.0), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> "Poly":
        factor = as_scalar(factor)
        return Poly(c * factor for c in self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient_len = len(remainder) - len(other.coeffs) + 1
        if quotient_len <= 0:
            return Poly(), self
        inv_lead = 1 / other.leading
        quotient: list[Scalar] = [ZERO] * quotient_len
        for k in range(quotient_len - 1, -1, -1):
            c = remainder[k + len(other.coeffs) - 1] * inv_lead
            quotient[k] = c
            if not c:
                continue
            for j, b in enumerate(other.coeffs):
                remainder[k + j] = remainder[k + j] - c * b
        return Poly(quotient), Poly(remainder[: len(other.coeffs) - 1])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise InputError("polynomial division is not exact")
        return quotient

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return self == Poly.constant(other)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(c * k for k, c in enumerate(self.coeffs) if k > 0)

    # evaluation
    def __call__(self, z: Any) -> Scalar:
        if not self.coeffs:
            return ZERO if is_exact(z) else 0j
        z = as_scalar(z)
        if not self.is_exact or not isinstance(z, ExactComplex):
            z = complex(z)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on a complex numpy array."""
        if not self.coeffs:
            return np.zeros_like(np.asarray(z, dtype=complex))
        return np.polyval(self.to_numpy()[::-1], np.asarray(z, dtype=complex))

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    # changes of variable
    def shift(self, a: Any) -> "Poly":
        """p(z + a), by repeated synthetic division."""
        a = as_scalar(a)
        coeffs = list(self.coeffs)
        n = len(coeffs)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] = coeffs[j] + a * coeffs[j + 1]
        return Poly(coeffs)

    def reversed(self, n: Optional[int] = None) -> "Poly":
        """z^n · p(1/z), with n defaulting to the degree."""
        if self.is_zero:
            return Poly()
        n = self.degree if n is None else n
        if n < self.degree:
            raise InputError("reversal order below the degree")
        return Poly(self.coeffs[::-1]) * Poly.monomial(n - self.degree)

    def compose(self, other: "Poly") -> "Poly":
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    # exact algorithms
    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "Poly") -> "Poly":
        if not (self.is_exact and other.is_exact):
            raise Unsupported("polynomial gcd needs exact coefficients")
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def squarefree(self) -> list[tuple["Poly", int]]:
        """Yun decomposition: [(f_k, k)] with self = lead · Π f_k^k, f_k monic, square-free."""
        if self.is_zero:
            raise ZeroPolynomialError("square-free decomposition of zero")
        if self.degree == 0:
            return []
        f = self.monic()
        df = f.derivative()
        a = f.gcd(df)
        b = f.exact_div(a)
        c = df.exact_div(a)
        d = c - b.derivative()
        factors: list[tuple[Poly, int]] = []
        k = 1
        while not b.is_constant:
            a = b.gcd(d)
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            if not a.is_constant:
                factors.append((a, k))
            k += 1
        return factors

    def order_at(self, point: Any, tol: float = 0.0) -> int:
        """Multiplicity of `point` as a root; numeric polynomials use a relative tolerance."""
        if self.is_zero:
            raise ZeroPolynomialError("every point is a root of the zero polynomial")
        point = as_scalar(point)
        if self.is_exact and isinstance(point, ExactComplex):
            order, current = 0, self
            linear = Poly([-point, 1])
            while not current.is_zero and not current(point):
                current = current.exact_div(linear)
                order += 1
            return order
        shifted = Poly(complex(c) for c in self.coeffs).shift(complex(point))
        scale = self.norm() * (1.0 + abs(complex(point))) ** self.degree
        order = 0
        for c in shifted.coeffs:
            if abs(c) > tol * scale:
                break
            order += 1
        return min(order, self.degree)

    def trim(self, rel_tol: float) -> "Poly":
        """Drop leading coefficients below rel_tol·‖p‖ (numeric cancellation)."""
        if self.is_exact or self.is_zero:
            return self
        bound = rel_tol * self.norm()
        coeffs = list(self.coeffs)
        while coeffs and abs(coeffs[-1]) <= bound:
            coeffs.pop()
        return Poly(coeffs)

    # serialization
    def to_json(self) -> list[list[Any]]:
        if self.is_exact:
            return [c.to_pair() for c in self.coeffs]  # type: ignore[union-attr]
        return [[complex(c).real, complex(c).imag] for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            terms.append(f"({c})" + ("" if k == 0 else "z" if k == 1 else f"z^{k}"))
        return "Poly(" + " + ".join(terms) + ")"


def poly(coeffs: Sequence[Any]) -> Poly:
    return Poly(coeffs)


__all__ = ["Poly", "poly"]
