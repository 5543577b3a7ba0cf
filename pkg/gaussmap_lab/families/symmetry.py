"""Möbius identifications between ω variants and the double covers, checked at sample points."""
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional

import numpy as np

from gaussmap_lab.algebra.scalars import I
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.families.gauss import get_case, variant_data
from gaussmap_lab.families.known import kw
from gaussmap_lab.sphere.moebius import MoebiusMap
from gaussmap_lab.weierstrass.data import WeierstrassData, alpha

_TOL = 1e-8

NEGATION = MoebiusMap(-1, 0, 0, 1)
# z ↦ i(z + i)/(z − i): ∞ → i → ∞, 0 → −i → 0
QUARTER_TURN = MoebiusMap(I, -1, 1, -I)
ANTIPODAL_INVERSION = MoebiusMap(0, -1, 1, 0)


def sample_points(count: int = 10) -> np.ndarray:
    """Fixed points away from 0, ±1, ±i, ±i/√2 and ±√2 i."""
    k = np.arange(count)
    return (0.43 + 0.17 * k) * np.exp(1j * (0.35 + 0.93 * k))


def _moebius(M: MoebiusMap, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a, b, c, d = (complex(x) for x in (M.a, M.b, M.c, M.d))
    w = c * z + d
    return (a * z + b) / w, (a * d - b * c) / (w * w)


def _relative(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(x - y) / (1.0 + np.abs(y))))


@dataclass(frozen=True)
class Symmetry:
    name: str
    case: str
    source: int
    target: int
    transform: MoebiusMap
    swap: Optional[tuple[str, str]] = None


SYMMETRIES: dict[str, Symmetry] = {
    s.name: s
    for s in (
        Symmetry("c1-w3-w4", "case1", 3, 4, NEGATION),
        Symmetry("c1-w6-w7", "case1", 6, 7, NEGATION),
        Symmetry("c1-w9-w10", "case1", 9, 10, NEGATION),
        Symmetry("c4-w5-w8", "case4", 5, 8, QUARTER_TURN, ("sigma", "tau")),
        Symmetry("d1-w5-w8", "d1", 5, 8, QUARTER_TURN, ("b1", "b2")),
    )
}


@dataclass(frozen=True)
class SymmetryCheck:
    name: str
    gauss_error: float
    omega_spread: float
    factor: complex

    @property
    def passed(self) -> bool:
        return self.gauss_error <= _TOL and self.omega_spread <= _TOL


def _swapped(params: Mapping[str, Any], swap: Optional[tuple[str, str]]) -> dict[str, Any]:
    out = dict(params)
    if swap is not None:
        x, y = swap
        out[x], out[y] = params[y], params[x]
    return out


def check_symmetry(name: str, params: Mapping[str, Any], samples: Optional[np.ndarray] = None) -> SymmetryCheck:
    """g∘M = g′ and M*ω = c·ω′ with c constant, where ′ marks the target variant."""
    try:
        entry = SYMMETRIES[name]
    except KeyError:
        raise InputError(f"unknown symmetry {name!r}", known=sorted(SYMMETRIES)) from None
    spec = get_case(entry.case)
    values = {k: params[k] for k in spec.names}
    values["theta"] = params.get("theta", 1)
    source = variant_data(entry.case, entry.source, values)
    target = variant_data(entry.case, entry.target, _swapped(values, entry.swap))

    z = sample_points() if samples is None else np.asarray(samples, dtype=complex)
    w, dw = _moebius(entry.transform, z)
    gauss_error = _relative(source.g.evaluate(w), target.g.evaluate(z))
    ratio = source.h.evaluate(w) * dw / target.h.evaluate(z)
    spread = float(np.max(np.abs(ratio - ratio[0])) / abs(ratio[0]))
    return SymmetryCheck(name=name, gauss_error=gauss_error, omega_spread=spread, factor=complex(ratio[0]))


@dataclass(frozen=True)
class DoubleCover:
    involution: MoebiusMap
    quotient: str
    project: Callable[[np.ndarray], np.ndarray]


DOUBLE_COVERS: dict[str, DoubleCover] = {
    "t47-c1-w8": DoubleCover(NEGATION, "w = z²", lambda z: z * z),
    "t47-c4-w5": DoubleCover(ANTIPODAL_INVERSION, "w = z − 1/z", lambda z: z - 1 / z),
}


@dataclass(frozen=True)
class DoubleCoverCheck:
    id: str
    quotient: str
    gauss_error: float
    alpha_error: float
    quotient_error: float

    @property
    def passed(self) -> bool:
        return max(self.gauss_error, self.alpha_error, self.quotient_error) <= _TOL


def check_double_cover(id: str, data: WeierstrassData, samples: Optional[np.ndarray] = None) -> DoubleCoverCheck:
    """g and α are invariant under the involution, and so is the quotient coordinate."""
    try:
        cover = DOUBLE_COVERS[id]
    except KeyError:
        raise InputError(f"{id} has no recorded double cover", known=sorted(DOUBLE_COVERS)) from None
    z = sample_points() if samples is None else np.asarray(samples, dtype=complex)
    w, dw = _moebius(cover.involution, z)
    A = alpha(data)
    return DoubleCoverCheck(
        id=id,
        quotient=cover.quotient,
        gauss_error=_relative(data.g.evaluate(w), data.g.evaluate(z)),
        alpha_error=_relative(A.evaluate(w) * dw, A.evaluate(z)),
        quotient_error=_relative(cover.project(w), cover.project(z)),
    )


def check_kw_recovery(params: Mapping[str, Any], samples: Optional[np.ndarray] = None) -> float:
    """Largest gap between the four-ended (a, b, σ) map and case 1 at (σa, σ, σb) read in 1/z."""
    p = kw.validate(params)
    a, b, sigma = p["a"], p["b"], p["sigma"]
    case1 = variant_data("case1", 1, {"sigma": sigma * a, "tau": sigma, "b": sigma * b, "theta": 1})
    z = sample_points() if samples is None else np.asarray(samples, dtype=complex)
    return _relative(case1.g.evaluate(1 / z), kw.gauss_map(p).evaluate(z))


__all__ = [
    "DOUBLE_COVERS",
    "SYMMETRIES",
    "DoubleCover",
    "DoubleCoverCheck",
    "Symmetry",
    "SymmetryCheck",
    "check_double_cover",
    "check_kw_recovery",
    "check_symmetry",
    "sample_points",
]
