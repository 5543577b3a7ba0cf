"""Period-closable ω variants on C̄ ∖ {∞, ±i, t} and their closed-form residues.

A printed residue is stored as prefactor × bracket. Prefactors are real or
purely imaginary, so realness of the residue is Im(bracket) = 0 or
Re(bracket) = 0 respectively; these are the displayed period constraints.
"""
from fractions import Fraction
from typing import Any, Mapping, Optional

import numpy as np

from gaussmap_lab.algebra.points import INF, SpherePoint
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import I
from gaussmap_lab.families.base import Expected, FamilyBase, Params, Triple, distinct, nonzero
from gaussmap_lab.families.gauss import get_case, omega_denominator

Term = tuple[complex, complex]


def _scaled(triple: Triple, factor: complex) -> Triple:
    return tuple(factor * r for r in triple)  # type: ignore[return-value]


class VariantFamily(FamilyBase):
    case: str = "case1"
    variant: int = 1
    defaults = {"theta": 1}
    constrained = True
    expected = Expected(D=2, R=1, nu=Fraction(5, 2), curvature=-16)

    # residue at −i as a multiple of the residue at i
    minus_i_ratio: complex = -1
    # residue at the finite end t as a multiple of the residue at i (None: printed separately)
    zero_ratio: Optional[complex] = 0

    def __init__(self) -> None:
        spec = get_case(self.case)
        self.spec = spec
        self.param_names = spec.names + ("theta",)
        self.punctures = spec.punctures()

    def check(self, params: Params) -> None:
        x, y, z = (params[name] for name in self.spec.names)
        if not (distinct(x, y) and distinct(y, z) and distinct(x, z)):
            raise self.fail(f"{', '.join(self.spec.names)} pairwise distinct")
        if not nonzero(params["theta"]):
            raise self.fail("θ ≠ 0")

    def _pair(self, params: Params) -> tuple[Any, Any]:
        return self.spec.pair(*(params[name] for name in self.spec.names))

    def gauss_map(self, params: Params) -> RationalMap:
        return RationalMap.of(*self._pair(params))

    def omega(self, params: Params) -> Optional[RationalMap]:
        _, g1 = self._pair(params)
        return RationalMap.of((g1 * g1).scale(params["theta"]), omega_denominator(self.spec.t, self.variant))

    # printed closed forms
    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        raise NotImplementedError

    def _complex_params(self, raw: Optional[Mapping[str, Any]]) -> dict[str, complex]:
        return {name: complex(value) for name, value in self.validate(raw).items()}

    def residue_formulas(self, raw: Optional[Mapping[str, Any]]) -> dict[SpherePoint, Triple]:
        printed = self.printed(self._complex_params(raw))
        values = {key: tuple(c * e for c, e in terms) for key, terms in printed.items()}
        at_i: Triple = values["i"]  # type: ignore[assignment]
        at_minus_i = _scaled(at_i, self.minus_i_ratio)
        if self.zero_ratio is None:
            at_t: Triple = values["0"]  # type: ignore[assignment]
        else:
            at_t = _scaled(at_i, self.zero_ratio)
        at_inf = tuple(-(a + b + c) for a, b, c in zip(at_i, at_minus_i, at_t))
        return {I: at_i, -I: at_minus_i, self.spec.t: at_t, INF: at_inf}  # type: ignore[dict-item]

    def period_constraints(self, raw: Optional[Mapping[str, Any]]) -> np.ndarray:
        out = []
        for terms in self.printed(self._complex_params(raw)).values():
            for c, e in terms:
                out.append(e.imag if c.imag == 0 else e.real)
        return np.array(out, dtype=float)


class CaseOneDoubleFamily(VariantFamily):
    """Case 1 with ω of pole orders (2, 2, 2) at (0, i, −i)."""

    id = "t47-c1-w1"
    title = "case 1, ω shape (2,2,2)"
    case, variant = "case1", 1
    example = {"sigma": "exp(i*pi/6)", "tau": 0, "b": "-3/13*sigma", "theta": 1}

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
        u = th * (b - s)
        return {
            "i": [
                (1j / 8, u * (b * (16 * s * t - 3 * t**2 - 13) - s * (13 * t**2 + 3) + 16 * t)),
                (1 / 8 + 0j, u * (b * (16 * s * t - 3 * t**2 + 13) - s * (13 * t**2 - 3) - 16 * t)),
                (-1j / 4, u * (b * (8 * s + 5 * t) - t * (5 * s + 8 * t))),
            ]
        }


class CaseOneQuarticFamily(VariantFamily):
    """Case 1 with ω of pole orders (4, 2, 2)."""

    id = "t47-c1-w2"
    title = "case 1, ω shape (4,2,2)"
    case, variant = "case1", 2
    example = {"sigma": "exp(i*pi/6)", "tau": 0, "b": "-5/11*sigma", "theta": 1}

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
        u = th * (b - s)
        return {
            "i": [
                (-1j / 8, u * (b * (16 * s * t - 5 * t**2 - 11) - s * (11 * t**2 + 5) + 16 * t)),
                (-1 / 8 + 0j, u * (b * (16 * s * t - 5 * t**2 + 11) - s * (11 * t**2 - 5) - 16 * t)),
                (1j / 4, u * (b * (8 * s + 3 * t) - t * (3 * s + 8 * t))),
            ]
        }


class CaseOneCubicFamily(VariantFamily):
    """Case 1 with ω of pole orders (2, 3, 3)."""

    id = "t47-c1-w5"
    title = "case 1, ω shape (2,3,3)"
    case, variant = "case1", 5
    example = {"sigma": "sqrt(13/2)", "tau": 0, "b": "-sigma/7", "theta": 1}

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
        first = (
            b**2 * (128 * s**2 - 32 * s * t + 15 * t**2 - 111)
            - 2 * b * (112 * s**2 * t - s * t**2 + s - 112 * t)
            + 3 * s**2 * (37 * t**2 - 5)
            + 32 * t * (s - 4 * t)
        )
        second = (
            b**2 * (128 * s**2 - 32 * s * t + 15 * t**2 + 111)
            - 2 * b * (112 * s**2 * t - s * t**2 - s + 112 * t)
            + 3 * s**2 * (37 * t**2 + 5)
            - 32 * t * (s - 4 * t)
        )
        third = b**2 * (112 * s - t) + 2 * b * (8 * s**2 - 127 * s * t + 8 * t**2) - s * t * (s - 112 * t)
        return {"i": [(-1j / 32, th * first), (-1 / 32 + 0j, th * second), (1j / 16, th * third)]}


class CaseOneOddFamily(VariantFamily):
    """Case 1 with ω of pole orders (3, 2, 2); the surface doubly covers a quotient by z ↦ −z."""

    id = "t47-c1-w8"
    title = "case 1, ω shape (3,2,2)"
    case, variant = "case1", 8
    example = {"sigma": 1, "tau": 0, "b": "-sigma/3", "theta": 1}
    minus_i_ratio = 1
    zero_ratio = -2

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
        u = th * (b - s)
        return {
            "i": [
                (1 / 2 + 0j, u * (b * (4 * s * t - t**2 - 3) - s * (3 * t**2 + 1) + 4 * t)),
                (-1j / 2, u * (b * (4 * s * t - t**2 + 3) - s * (3 * t**2 - 1) - 4 * t)),
                (-1 + 0j, u * (b * (2 * s + t) - t * (s + 2 * t))),
            ]
        }


class CaseFourCubicFamily(VariantFamily):
    """Case 4 with ω of pole orders (2, 3, 3)."""

    id = "t47-c4-w5"
    title = "case 4, ω shape (2,3,3)"
    case, variant = "case4", 5
    example = {"sigma": "exp(i*pi/6)", "tau": 0, "b": "-sigma/3", "theta": 1}

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
        u = th * (b - s)
        return {
            "i": [
                (-1j / 2, u * (b * (4 * s * t - t**2 - 3) - s * (3 * t**2 + 1) + 4 * t)),
                (-1 / 2 + 0j, u * (b * (4 * s * t - t**2 + 3) - s * (3 * t**2 - 1) - 4 * t)),
                (1j, u * (b * (2 * s + t) - t * (s + 2 * t))),
            ]
        }


class SingleOmittedFamily(VariantFamily):
    """One omitted value σ at the four ends; b₁, b₂ attained with multiplicity 4 at ±1."""

    id = "p49-w5"
    title = "one omitted value, ω shape (2,3,3)"
    case, variant = "d1", 5
    expected = Expected(D=1, R=2, nu=Fraction(5, 2), curvature=-16)
    example = {"sigma": "i", "b1": "(-4*sqrt(10) + 3*i)/13", "b2": "(4*sqrt(10) + 3*i)/13", "theta": 1}
    zero_ratio = None

    def printed(self, p: Mapping[str, complex]) -> dict[str, list[Term]]:
        s, b1, b2, th = p["sigma"], p["b1"], p["b2"], p["theta"]
        first = (
            32 * s * (b2 - s)
            + 13 * b2**2 * (s**2 - 1)
            + b1**2 * (32 * b2**2 - 32 * b2 * s + 13 * (s**2 - 1))
            + b1 * (32 * s - 32 * b2**2 * s + 6 * b2 * (s**2 - 1))
        )
        second = (
            32 * s * (b2 - s)
            - 13 * b2**2 * (s**2 + 1)
            - b1**2 * (32 * b2**2 - 32 * b2 * s + 13 * (s**2 + 1))
            + b1 * (32 * s + 32 * b2**2 * s - 6 * b2 * (s**2 + 1))
        )
        third = b1**2 * (16 * b2 - 3 * s) - b2 * s * (3 * b2 - 16 * s) + 2 * b1 * (8 * b2**2 - 29 * b2 * s + 8 * s**2)
        v = th * (b1 - b2)
        return {
            "i": [(1j / 2, th * first), (-1 / 2 + 0j, th * second), (-1j, th * third)],
            "0": [
                (4 + 0j, v * (b1 * (2 * b2 * s - s**2 - 1) - b2 * (s**2 + 1) + 2 * s)),
                (-4j, v * (b1 * (2 * b2 * s - s**2 + 1) - b2 * (s**2 - 1) - 2 * s)),
                (-8 + 0j, v * (b1 * b2 - s**2)),
            ],
        }


t47_c1_w1 = CaseOneDoubleFamily()
t47_c1_w2 = CaseOneQuarticFamily()
t47_c1_w5 = CaseOneCubicFamily()
t47_c1_w8 = CaseOneOddFamily()
t47_c4_w5 = CaseFourCubicFamily()
p49_w5 = SingleOmittedFamily()

__all__ = [
    "CaseFourCubicFamily",
    "CaseOneCubicFamily",
    "CaseOneDoubleFamily",
    "CaseOneOddFamily",
    "CaseOneQuarticFamily",
    "SingleOmittedFamily",
    "VariantFamily",
    "p49_w5",
    "t47_c1_w1",
    "t47_c1_w2",
    "t47_c1_w5",
    "t47_c1_w8",
    "t47_c4_w5",
]
