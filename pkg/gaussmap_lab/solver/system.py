"""Residual systems over real variables: family period constraints or hand-written residuals."""
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from gaussmap_lab.algebra.scalars import approx, as_scalar
from gaussmap_lab.core.exceptions import (
    ConfigError,
    Degenerate,
    InputError,
    InvalidParams,
    NonFiniteValue,
    Unsupported,
    ZeroDenominator,
)
from gaussmap_lab.families.registry import get_family
from gaussmap_lab.schemas.solve import SolveSpec
from gaussmap_lab.solver.certificate import Certificate, verify_solution
from gaussmap_lab.utils.expressions import CompiledTie, compile_tie, parse_constant

Vector = np.ndarray
Residual = Callable[[Vector], Vector]


def _always(x: Vector) -> bool:
    return True


@dataclass
class ConstraintSystem:
    names: tuple[str, ...]
    residual: Residual
    family: Optional[str] = None
    valid: Callable[[Vector], bool] = _always
    center: Optional[Vector] = None
    to_params: Optional[Callable[[Vector], dict[str, complex]]] = None
    certify: Optional[Callable[[dict[str, complex]], Certificate]] = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.names:
            raise ConfigError("the free-parameter mask is empty", family=self.family)

    @property
    def dimension(self) -> int:
        return len(self.names)

    def evaluate(self, x: Vector) -> Optional[Vector]:
        """Residual at x, or None outside the validity domain."""
        if not self.valid(x):
            return None
        try:
            r = np.asarray(self.residual(x), dtype=float)
        except (InvalidParams, ZeroDenominator, NonFiniteValue, Degenerate, ZeroDivisionError):
            return None
        if r.size == 0:
            raise ConfigError("the residual vector is empty", family=self.family)
        if not np.all(np.isfinite(r)):
            return None
        return r

    def params(self, x: Vector) -> dict[str, complex]:
        if self.to_params is not None:
            return self.to_params(x)
        return {name: complex(v) for name, v in zip(self.names, x)}

    # construction
    @classmethod
    def custom(
        cls,
        residual: Residual,
        names: Sequence[str],
        valid: Optional[Callable[[Vector], bool]] = None,
        center: Optional[Sequence[float]] = None,
        to_params: Optional[Callable[[Vector], dict[str, complex]]] = None,
    ) -> "ConstraintSystem":
        return cls(
            names=tuple(names),
            residual=residual,
            valid=valid or _always,
            center=None if center is None else np.asarray(center, dtype=float),
            to_params=to_params,
        )

    @classmethod
    def from_spec(cls, spec: SolveSpec) -> "ConstraintSystem":
        family = get_family(spec.family)
        if not family.constrained:
            raise Unsupported(f"{family.id} has no period constraints to solve", family=family.id)
        known = set(family.param_names)
        parts = spec.free_parts()
        free = {name for name, _ in parts}

        unknown = (set(spec.fix) | set(spec.tie) | free | set(spec.start)) - known
        if unknown:
            raise InputError(f"{family.id}: unknown parameters {sorted(unknown)}", family=family.id)
        for name in family.param_names:
            if name not in spec.fix and name not in spec.tie and name not in free and name not in family.defaults:
                raise ConfigError(f"{name} is neither fixed, tied nor free", family=family.id)

        base: dict[str, complex] = {}
        for name, value in family.defaults.items():
            base[name] = complex(parse_constant(value) if isinstance(value, str) else as_scalar(value))
        base.update({name: approx(v) for name, v in spec.start.items()})
        base.update({name: approx(v) for name, v in spec.fix.items()})

        ties: dict[str, CompiledTie] = {}
        available = set(base) | free
        for name, text in spec.tie.items():
            tie = compile_tie(text, known)
            missing = set(tie.names) - available
            if missing:
                raise ConfigError(f"tie for {name} uses undetermined {sorted(missing)}", family=family.id)
            ties[name] = tie
            available.add(name)

        def assemble(x: Vector) -> dict[str, complex]:
            values = dict(base)
            for (name, part), v in zip(parts, x):
                z = values.get(name, 0j)
                values[name] = complex(float(v), z.imag) if part == "re" else complex(z.real, float(v))
            for name, tie in ties.items():
                values[name] = tie(values)
            return values

        def residual(x: Vector) -> Vector:
            values = assemble(x)
            periods = family.period_constraints(values)
            units = [abs(values[name]) ** 2 - 1.0 for name in spec.unit]
            return np.concatenate([periods, np.array(units, dtype=float)])

        def valid(x: Vector) -> bool:
            try:
                family.validate(assemble(x))
            except (InvalidParams, NonFiniteValue):
                return False
            return True

        center = np.array([getattr(base.get(name, 0j), "real" if part == "re" else "imag") for name, part in parts])
        return cls(
            names=tuple(f"{part}:{name}" for name, part in parts),
            residual=residual,
            family=family.id,
            valid=valid,
            center=center if spec.start else None,
            to_params=assemble,
            certify=lambda params: verify_solution(family.id, params),
        )


def case_two_system(min_modulus: float = 0.1) -> ConstraintSystem:
    """Case 2, ω shape (2,2,2): realness of the residues at −i over (τ, U), with |U| ≥ min_modulus."""

    def unpack(x: Vector) -> tuple[complex, complex]:
        return complex(x[0], x[1]), complex(x[2], x[3])

    def residual(x: Vector) -> Vector:
        tau, U = unpack(x)
        residues = (-64j * U * (tau * tau - 1), -64 * U * (tau * tau + 1), 128j * U * tau)
        return np.array([r.imag for r in residues])

    def valid(x: Vector) -> bool:
        return abs(unpack(x)[1]) >= min_modulus

    def to_params(x: Vector) -> dict[str, Any]:
        tau, U = unpack(x)
        return {"tau": tau, "U": U}

    system = ConstraintSystem.custom(
        residual,
        ("re:tau", "im:tau", "re:U", "im:U"),
        valid=valid,
        to_params=to_params,
    )
    system.notes.append(f"|U| >= {min_modulus}")
    return system


__all__ = ["ConstraintSystem", "case_two_system"]
