"""Variants whose period condition forces U = 0, and the residue combinations that show it.

Each obstruction reduces to three memberships (τ² − 1)U ∈ iR, (τ² + 1)U ∈ R and
τU ∈ iR. They are real-linear in U, so U = 0 is forced exactly when the 3×2
real system has rank 2.
"""
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint
from gaussmap_lab.algebra.residue import Mode, residue
from gaussmap_lab.algebra.scalars import I, ExactComplex
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.families.base import Triple
from gaussmap_lab.families.gauss import get_case, variant_data
from gaussmap_lab.weierstrass.data import alpha

_TOL = 1e-12


@dataclass(frozen=True)
class ObstructionVerdict:
    triple: Triple
    conditions: tuple[bool, bool, bool]
    branch: str
    rank: int
    margin: float

    @property
    def infeasible(self) -> bool:
        """Only U = 0 satisfies the three memberships at this τ."""
        return self.rank == 2


def _branch(tau: complex, tol: float) -> str:
    if abs(tau * tau + 1) <= tol:
        return "tau_squared_is_minus_one"
    if abs(abs(tau) - 1) <= tol:
        return "unit_circle"
    return "generic"


def obstruction_triple(U: complex, tau: complex, tol: float = _TOL) -> ObstructionVerdict:
    """((τ² − 1)U, (τ² + 1)U, τU) and whether the memberships leave any U ≠ 0."""
    U, tau = complex(U), complex(tau)
    c1, c2 = tau * tau - 1, tau * tau + 1
    triple = (c1 * U, c2 * U, tau * U)
    scale = 1.0 + max(abs(v) for v in triple)
    conditions = (
        abs(triple[0].real) <= tol * scale,
        abs(triple[1].imag) <= tol * scale,
        abs(triple[2].real) <= tol * scale,
    )
    # rows act on (Re U, Im U)
    rows = np.array(
        [
            [c1.real, -c1.imag],
            [c2.imag, c2.real],
            [tau.real, -tau.imag],
        ]
    )
    singular = np.linalg.svd(rows, compute_uv=False)
    rank = int(np.sum(singular > tol * max(singular[0], 1.0)))
    return ObstructionVerdict(
        triple=triple,
        conditions=conditions,
        branch=_branch(tau, 1e-9),
        rank=rank,
        margin=float(singular[-1] / singular[0]) if singular[0] else 0.0,
    )


Residues = Mapping[SpherePoint, Triple]


@dataclass(frozen=True)
class Obstruction:
    name: str
    case: str
    variant: int
    points: tuple[SpherePoint, ...]
    combine: Callable[[Residues], Triple]
    printed: Callable[[Mapping[str, complex]], Triple]
    unit: Callable[[Mapping[str, complex]], complex]
    parameter: str = "tau"
    # U fed to obstruction_triple is rotation·unit
    rotation: complex = 1


def _u(p: Mapping[str, complex]) -> complex:
    return p["theta"] * (p["b"] - p["sigma"]) ** 2


def _u_single(p: Mapping[str, complex]) -> complex:
    return p["theta"] * (p["b1"] - p["b2"]) ** 2


_ORIGIN = ExactComplex(0)

OBSTRUCTIONS: dict[str, Obstruction] = {
    "c1-w3": Obstruction(
        name="c1-w3",
        case="case1",
        variant=3,
        points=(_ORIGIN,),
        combine=lambda r: r[_ORIGIN],
        printed=lambda p: (
            -1j * _u(p) * (p["tau"] ** 2 - 1),
            -_u(p) * (p["tau"] ** 2 + 1),
            2j * _u(p) * p["tau"],
        ),
        unit=_u,
    ),
    "c1-w9": Obstruction(
        name="c1-w9",
        case="case1",
        variant=9,
        points=(_ORIGIN,),
        combine=lambda r: r[_ORIGIN],
        printed=lambda p: (
            -0.5 * _u(p) * (p["tau"] ** 2 - 1),
            0.5j * _u(p) * (p["tau"] ** 2 + 1),
            _u(p) * p["tau"],
        ),
        unit=_u,
        rotation=1j,
    ),
    "c1-w6": Obstruction(
        name="c1-w6",
        case="case1",
        variant=6,
        points=(-I, _ORIGIN),
        combine=lambda r: (
            32 * r[-I][0] + 8 * r[_ORIGIN][0],
            32 * r[-I][1] + 8 * r[_ORIGIN][1],
            -16 * r[-I][2] - 4 * r[_ORIGIN][2],
        ),
        printed=lambda p: (
            3j * _u(p) * (p["tau"] ** 2 - 1),
            3 * _u(p) * (p["tau"] ** 2 + 1),
            3j * _u(p) * p["tau"],
        ),
        unit=_u,
    ),
    "c2-w1": Obstruction(
        name="c2-w1",
        case="case2",
        variant=1,
        points=(-I,),
        combine=lambda r: r[-I],
        printed=lambda p: (
            -64j * _u(p) * (p["tau"] ** 2 - 1),
            -64 * _u(p) * (p["tau"] ** 2 + 1),
            128j * _u(p) * p["tau"],
        ),
        unit=_u,
    ),
    "d1-w1": Obstruction(
        name="d1-w1",
        case="d1",
        variant=1,
        points=(I, -I),
        combine=lambda r: tuple(a - b for a, b in zip(r[I], r[-I])),  # type: ignore[return-value]
        printed=lambda p: (
            4j * _u_single(p) * (p["sigma"] ** 2 - 1),
            4 * _u_single(p) * (p["sigma"] ** 2 + 1),
            -8j * _u_single(p) * p["sigma"],
        ),
        unit=_u_single,
        parameter="sigma",
    ),
}


def get_obstruction(name: str) -> Obstruction:
    try:
        return OBSTRUCTIONS[name]
    except KeyError:
        raise InputError(f"unknown obstruction {name!r}", known=sorted(OBSTRUCTIONS)) from None


@dataclass(frozen=True)
class ObstructionCheck:
    name: str
    printed: Triple
    computed: Triple
    relative_error: float
    verdict: ObstructionVerdict


def check_obstruction(
    name: str,
    params: Mapping[str, Any],
    mode: Mode = "auto",
    nodes: Optional[int] = None,
) -> ObstructionCheck:
    """Compare the printed combination with residues of the built variant."""
    entry = get_obstruction(name)
    spec = get_case(entry.case)
    values = {k: params[k] for k in spec.names}
    values["theta"] = params.get("theta", 1)
    data = variant_data(entry.case, entry.variant, values)
    A = alpha(data)
    residues = {
        p: tuple(complex(residue(a, p, mode=mode, nodes=nodes, strict=False)) for a in A.components)
        for p in entry.points
    }
    computed = entry.combine(residues)  # type: ignore[arg-type]
    p = {k: complex(v) for k, v in values.items()}
    printed = entry.printed(p)
    scale = max(1.0, max(abs(v) for v in printed))
    error = max(abs(a - b) for a, b in zip(computed, printed)) / scale
    verdict = obstruction_triple(entry.rotation * entry.unit(p), p[entry.parameter])
    return ObstructionCheck(name=name, printed=printed, computed=computed, relative_error=error, verdict=verdict)


__all__ = [
    "OBSTRUCTIONS",
    "Obstruction",
    "ObstructionCheck",
    "ObstructionVerdict",
    "check_obstruction",
    "get_obstruction",
    "obstruction_triple",
]
