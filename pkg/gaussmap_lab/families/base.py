"""Shared machinery of the named families: parameter coercion, validity predicates and instances."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import ExactComplex, Scalar, as_scalar
from gaussmap_lab.core.exceptions import InputError, InvalidParams, Unsupported
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.utils.expressions import parse_constant
from gaussmap_lab.weierstrass.data import WeierstrassData

Params = dict[str, Scalar]
Triple = tuple[complex, complex, complex]

_DISTINCT_TOL = 1e-12


@dataclass(frozen=True)
class Expected:
    """(D_g, R_g, ν_g) and the total curvature in units of π (None when no ω is attached)."""

    D: int
    R: int
    nu: Fraction
    curvature: Optional[int] = None


@dataclass(frozen=True)
class FamilyInstance:
    id: str
    params: Params
    g: RationalMap
    dom: PuncturedSphere
    expected: Expected
    data: Optional[WeierstrassData] = None


def is_real(value: Scalar, tol: float = _DISTINCT_TOL) -> bool:
    if isinstance(value, ExactComplex):
        return value.im == 0
    z = complex(value)
    return abs(z.imag) <= tol * (1.0 + abs(z))


def is_imaginary(value: Scalar, tol: float = _DISTINCT_TOL) -> bool:
    if isinstance(value, ExactComplex):
        return value.re == 0
    z = complex(value)
    return abs(z.real) <= tol * (1.0 + abs(z))


def distinct(x: Scalar, y: Scalar, tol: float = _DISTINCT_TOL) -> bool:
    if isinstance(x, ExactComplex) and isinstance(y, ExactComplex):
        return x != y
    a, b = complex(x), complex(y)
    return abs(a - b) > tol * (1.0 + abs(a) + abs(b))


def nonzero(x: Scalar, tol: float = _DISTINCT_TOL) -> bool:
    if isinstance(x, ExactComplex):
        return bool(x)
    return abs(complex(x)) > tol


def close(x: Scalar, y: Scalar, tol: float = 1e-9) -> bool:
    if isinstance(x, ExactComplex) and isinstance(y, ExactComplex):
        return x == y
    a, b = complex(x), complex(y)
    return abs(a - b) <= tol * (1.0 + abs(a) + abs(b))


class FamilyBase:
    """One entry of the catalog. Subclasses provide the Gauss map, ω and their predicates."""

    id: str = ""
    title: str = ""
    param_names: tuple[str, ...] = ()
    defaults: Mapping[str, Any] = {}
    punctures: tuple[Any, ...] = ()
    expected: Expected = Expected(0, 0, Fraction(0))
    example: Mapping[str, Any] = {}
    canonical: bool = False
    constrained: bool = False

    # parameters
    def coerce(self, raw: Optional[Mapping[str, Any]]) -> Params:
        """Named scalars in declaration order; strings may refer to earlier names."""
        raw = dict(raw or {})
        unknown = set(raw) - set(self.param_names)
        if unknown:
            raise InputError(f"{self.id}: unknown parameters {sorted(unknown)}", family=self.id)
        params: Params = {}
        for name in self.param_names:
            if name in raw:
                value = raw[name]
            elif name in self.defaults:
                value = self.defaults[name]
            else:
                raise InvalidParams(f"parameter {name} is required", self.id)
            if isinstance(value, str):
                params[name] = parse_constant(value, params)
            else:
                params[name] = as_scalar(value)
        return params

    def fail(self, predicate: str) -> InvalidParams:
        return InvalidParams(predicate, self.id)

    def check(self, params: Params) -> None:
        """Raise InvalidParams naming the first violated predicate."""

    def validate(self, raw: Optional[Mapping[str, Any]]) -> Params:
        params = self.coerce(raw)
        self.check(params)
        return params

    def example_params(self) -> Params:
        return self.coerce(self.example)

    # construction
    def domain(self) -> PuncturedSphere:
        return PuncturedSphere(tuple(self.punctures))

    def gauss_map(self, params: Params) -> RationalMap:
        raise NotImplementedError

    def omega(self, params: Params) -> Optional[RationalMap]:
        return None

    def build(self, raw: Optional[Mapping[str, Any]] = None) -> FamilyInstance:
        params = self.validate(raw)
        g = self.gauss_map(params)
        dom = self.domain()
        h = self.omega(params)
        data = WeierstrassData.of(g, h, dom) if h is not None else None
        return FamilyInstance(id=self.id, params=params, g=g, dom=dom, expected=self.expected, data=data)

    # closed forms
    def period_constraints(self, raw: Optional[Mapping[str, Any]]) -> np.ndarray:
        raise Unsupported(f"{self.id} has no displayed period constraints", family=self.id)

    def residue_formulas(self, raw: Optional[Mapping[str, Any]]) -> dict[SpherePoint, Triple]:
        raise Unsupported(f"{self.id} has no closed-form residues", family=self.id)


@dataclass(frozen=True)
class FamilyInfo:
    id: str
    title: str
    params: tuple[str, ...]
    punctures: tuple[Any, ...] = field(default_factory=tuple)
    canonical: bool = False
    constrained: bool = False


__all__ = [
    "Expected",
    "FamilyBase",
    "FamilyInfo",
    "FamilyInstance",
    "Params",
    "Triple",
    "close",
    "distinct",
    "is_imaginary",
    "is_real",
    "nonzero",
]
