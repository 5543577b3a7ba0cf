"""Degree-4 Gauss maps of the four-ended families and the ten ω shapes attached to them."""
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional

from gaussmap_lab.algebra.points import INF
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import I, ExactComplex, Scalar
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.weierstrass.data import WeierstrassData

# pole orders of ω at (t, i, −i)
OMEGA_SHAPES: dict[int, tuple[int, int, int]] = {
    1: (2, 2, 2),
    2: (4, 2, 2),
    3: (2, 4, 2),
    4: (2, 2, 4),
    5: (2, 3, 3),
    6: (3, 3, 2),
    7: (3, 2, 3),
    8: (3, 2, 2),
    9: (2, 3, 2),
    10: (2, 2, 3),
}

Pair = tuple[Poly, Poly]


def _z(k: int) -> Poly:
    return Poly.monomial(k)


def case1_pair(sigma: Scalar, tau: Scalar, b: Scalar) -> Pair:
    """σ(b−τ)(2z²+1)² + b(τ−σ) over (b−τ)(2z²+1)² + (τ−σ)."""
    q = Poly([1, 0, 2]) ** 2
    return q.scale(sigma * (b - tau)) + b * (tau - sigma), q.scale(b - tau) + (tau - sigma)


def case2_pair(sigma: Scalar, tau: Scalar, b: Scalar) -> Pair:
    q = Poly([23, 10 * I, 1]) ** 2
    line = Poly([-I, 1]).scale(512 * I)
    return (
        q.scale(sigma * (b - tau)) + line.scale(b * (tau - sigma)),
        q.scale(b - tau) + line.scale(tau - sigma),
    )


def case4_pair(sigma: Scalar, tau: Scalar, b: Scalar) -> Pair:
    q = Poly([-1, 0, 1]) ** 2
    return (
        q.scale(sigma * (b - tau)) + _z(2).scale(4 * b * (sigma - tau)),
        q.scale(b - tau) + _z(2).scale(4 * (sigma - tau)),
    )


def single_omitted_pair(sigma: Scalar, b1: Scalar, b2: Scalar) -> Pair:
    """g(∞) = σ is the only omitted value; g(1) = b₁ and g(−1) = b₂ with multiplicity 4."""
    minus = Poly([-1, 1]) ** 4
    plus = Poly([1, 1]) ** 4
    return (
        minus.scale(b2 * (b1 - sigma)) + plus.scale(b1 * (sigma - b2)),
        minus.scale(b1 - sigma) + plus.scale(sigma - b2),
    )


@dataclass(frozen=True)
class CaseSpec:
    name: str
    t: ExactComplex
    names: tuple[str, str, str]
    pair: Callable[[Scalar, Scalar, Scalar], Pair]

    def punctures(self) -> tuple[Any, ...]:
        return (INF, I, -I, self.t)


CASES: dict[str, CaseSpec] = {
    "case1": CaseSpec("case1", ExactComplex(0), ("sigma", "tau", "b"), case1_pair),
    "case2": CaseSpec("case2", ExactComplex(0, -17), ("sigma", "tau", "b"), case2_pair),
    "case4": CaseSpec("case4", ExactComplex(0), ("sigma", "tau", "b"), case4_pair),
    "d1": CaseSpec("d1", ExactComplex(0), ("sigma", "b1", "b2"), single_omitted_pair),
}


def get_case(name: str) -> CaseSpec:
    try:
        return CASES[name]
    except KeyError:
        raise InputError(f"unknown case {name!r}", case=name, known=sorted(CASES)) from None


def omega_denominator(t: Scalar, variant: int) -> Poly:
    try:
        a, b, c = OMEGA_SHAPES[variant]
    except KeyError:
        raise InputError(f"unknown ω shape {variant}", variant=variant) from None
    return Poly([-t, 1]) ** a * Poly([-I, 1]) ** b * Poly([I, 1]) ** c


def variant_data(case: str, variant: int, params: Mapping[str, Scalar]) -> WeierstrassData:
    """g = g₀/g₁ of the case with ω = θ g₁² / ((z−t)^a (z−i)^b (z+i)^c) dz."""
    spec = get_case(case)
    g0, g1 = spec.pair(*(params[name] for name in spec.names))
    theta: Optional[Scalar] = params.get("theta")
    numerator = (g1 * g1).scale(1 if theta is None else theta)
    h = RationalMap.of(numerator, omega_denominator(spec.t, variant))
    return WeierstrassData.of(RationalMap.of(g0, g1), h, PuncturedSphere(spec.punctures()))


__all__ = [
    "CASES",
    "OMEGA_SHAPES",
    "CaseSpec",
    "case1_pair",
    "case2_pair",
    "case4_pair",
    "get_case",
    "omega_denominator",
    "single_omitted_pair",
    "variant_data",
]
