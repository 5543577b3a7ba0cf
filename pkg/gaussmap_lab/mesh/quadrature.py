"""Composite Gauss–Legendre integration of dz-coefficient forms along segments and arcs."""
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

import numpy as np

from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import InputError, PathThroughPole

_MAX_DEPTH = 40

Integrand = Callable[[np.ndarray], np.ndarray]


def as_integrand(form: Any) -> Integrand:
    """AlphaForm, a single RationalMap or a sequence of them, as z ↦ array of shape (k, *z.shape)."""
    if isinstance(form, RationalMap):
        return lambda z: form.evaluate(z)[None]
    if isinstance(form, (list, tuple)):
        parts = list(form)
        if not all(isinstance(p, RationalMap) for p in parts):
            raise InputError("form components must be rational maps")
        return lambda z: np.stack([p.evaluate(z) for p in parts])
    if hasattr(form, "evaluate"):
        return form.evaluate
    raise InputError(f"cannot integrate {type(form).__name__}")


def form_poles(form: Any) -> np.ndarray:
    """Finite poles of every rational component of the form."""
    if isinstance(form, RationalMap):
        parts = [form]
    elif isinstance(form, (list, tuple)):
        parts = list(form)
    else:
        parts = list(getattr(form, "components", ()))
    found = [
        c.center
        for part in parts
        if isinstance(part, RationalMap) and not part.den.is_constant
        for c in part.poles()
    ]
    return np.asarray(found, dtype=complex)


@dataclass(frozen=True)
class Segments:
    """Straight paths start[k] → end[k], parametrized over s ∈ [0, 1]."""

    start: np.ndarray
    end: np.ndarray

    def __len__(self) -> int:
        return len(self.start)

    def point(self, idx: np.ndarray, s: np.ndarray) -> np.ndarray:
        a, b = self.start[idx, None], self.end[idx, None]
        return a + (b - a) * s

    def velocity(self, idx: np.ndarray, s: np.ndarray) -> np.ndarray:
        return np.broadcast_to((self.end - self.start)[idx, None], s.shape)


@dataclass(frozen=True)
class Arcs:
    """Counterclockwise arcs around center[k] through sweep[k] radians."""

    center: np.ndarray
    radius: np.ndarray
    phase: np.ndarray
    sweep: np.ndarray

    def __len__(self) -> int:
        return len(self.center)

    def point(self, idx: np.ndarray, s: np.ndarray) -> np.ndarray:
        angle = self.phase[idx, None] + self.sweep[idx, None] * s
        return self.center[idx, None] + self.radius[idx, None] * np.exp(1j * angle)

    def velocity(self, idx: np.ndarray, s: np.ndarray) -> np.ndarray:
        return 1j * self.sweep[idx, None] * (self.point(idx, s) - self.center[idx, None])


def _pole_distance(path: Segments, poles: np.ndarray) -> np.ndarray:
    """Distance from each segment to the nearest pole."""
    if poles.size == 0:
        return np.full(len(path), np.inf)
    a, b = path.start[:, None], path.end[:, None]
    d = b - a
    length2 = np.abs(d) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.clip(np.real((poles[None, :] - a) * np.conj(d)) / length2, 0.0, 1.0)
    s = np.where(length2 > 0, s, 0.0)
    return np.min(np.abs(a + s * d - poles[None, :]), axis=1)


def _arc_pole_distance(path: Arcs, poles: np.ndarray) -> np.ndarray:
    """Distance from each arc to the nearest pole."""
    if poles.size == 0:
        return np.full(len(path), np.inf)
    offset = poles[None, :] - path.center[:, None]
    radius = path.radius[:, None]
    angle = np.mod(np.angle(offset) - path.phase[:, None], 2 * np.pi)
    on_sweep = angle <= path.sweep[:, None]
    start = np.abs(offset - radius * np.exp(1j * path.phase[:, None]))
    end = np.abs(offset - radius * np.exp(1j * (path.phase + path.sweep)[:, None]))
    distance = np.where(on_sweep, np.abs(np.abs(offset) - radius), np.minimum(start, end))
    return np.min(distance, axis=1)


def integrate_paths(
    form: Any,
    path: Any,
    nodes: Optional[int] = None,
    tol: Optional[float] = None,
    poles: Sequence[complex] = (),
    clearance: float = 0.0,
) -> np.ndarray:
    """∫ form dz along every path of the batch, shape (k, len(path)).

    Each interval is compared with its two halves; agreeing intervals are
    accepted, the others are bisected.
    """
    fn = as_integrand(form)
    nodes = nodes or settings.QUADRATURE_NODES
    tol = settings.QUADRATURE_TOL if tol is None else tol
    x, w = np.polynomial.legendre.leggauss(nodes)

    pole_array = np.asarray(list(poles), dtype=complex)
    if isinstance(path, Segments):
        distance = _pole_distance(path, pole_array)
        bad = np.flatnonzero(distance <= clearance)
        if bad.size:
            k = int(bad[0])
            raise PathThroughPole(
                "segment passes through a pole",
                start=str(path.start[k]),
                end=str(path.end[k]),
                distance=float(distance[k]),
            )
    elif isinstance(path, Arcs):
        distance = _arc_pole_distance(path, pole_array)
        bad = np.flatnonzero(distance <= clearance)
        if bad.size:
            k = int(bad[0])
            raise PathThroughPole(
                "arc passes through a pole",
                center=str(path.center[k]),
                radius=float(path.radius[k]),
                distance=float(distance[k]),
            )

    def rule(idx: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        half = (hi - lo) / 2
        s = ((hi + lo) / 2)[:, None] + half[:, None] * x[None, :]
        values = np.asarray(fn(path.point(idx, s))) * path.velocity(idx, s)
        if not np.all(np.isfinite(values)):
            k = int(idx[np.flatnonzero(~np.all(np.isfinite(values), axis=(0, 2)))[0]])
            raise PathThroughPole("the integrand is not finite on the path", path=k)
        return (values * w).sum(axis=-1) * half

    count = len(path)
    idx = np.arange(count)
    lo, hi = np.zeros(count), np.ones(count)
    coarse = rule(idx, lo, hi)
    total = np.zeros((coarse.shape[0], count), dtype=complex)

    for _ in range(_MAX_DEPTH):
        mid = (lo + hi) / 2
        left, right = rule(idx, lo, mid), rule(idx, mid, hi)
        fine = left + right
        error = np.max(np.abs(fine - coarse), axis=0)
        ok = error <= tol * (1.0 + np.max(np.abs(fine), axis=0))
        for k in range(total.shape[0]):
            np.add.at(total[k], idx[ok], fine[k, ok])
        if ok.all():
            return total
        keep = ~ok
        idx = np.concatenate([idx[keep], idx[keep]])
        lo, hi = np.concatenate([lo[keep], mid[keep]]), np.concatenate([mid[keep], hi[keep]])
        coarse = np.concatenate([left[:, keep], right[:, keep]], axis=1)

    raise PathThroughPole("quadrature did not settle; the path runs too close to a pole", paths=sorted(set(idx.tolist()))[:5])


def integrate_path(
    form: Any,
    start: complex,
    end: complex,
    nodes: Optional[int] = None,
    center: Optional[complex] = None,
    tol: Optional[float] = None,
    clearance: Optional[float] = None,
) -> np.ndarray:
    """∫ form dz from start to end: a straight segment, or the counterclockwise arc around `center`.

    With a center and start == end the path is the full circle. Paths that come
    within `clearance` of a pole of the form raise PathThroughPole.
    """
    clearance = settings.POINT_MATCH_TOL if clearance is None else clearance
    start, end = complex(start), complex(end)
    if center is None:
        path: Any = Segments(np.array([start]), np.array([end]))
    else:
        c = complex(center)
        radius = abs(start - c)
        if radius == 0 or abs(abs(end - c) - radius) > 1e-12 * (1.0 + radius):
            raise InputError("arc endpoints must lie on one circle around the center", center=str(c))
        phase = np.angle(start - c)
        sweep = np.mod(np.angle(end - c) - phase, 2 * np.pi)
        if sweep <= 1e-15:
            sweep = 2 * np.pi
        path = Arcs(np.array([c]), np.array([radius]), np.array([phase]), np.array([sweep]))
    return integrate_paths(form, path, nodes=nodes, tol=tol, poles=form_poles(form), clearance=clearance)[:, 0]


__all__ = ["Arcs", "Segments", "as_integrand", "form_poles", "integrate_path", "integrate_paths"]
