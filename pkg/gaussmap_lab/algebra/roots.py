"""Polynomial roots by Aberth–Ehrlich iteration, grouped into clusters with multiplicities."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import ConvergenceFailure, ZeroPolynomialError

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RootCluster:
    location: SpherePoint
    multiplicity: int
    radius: float = 0.0

    @property
    def center(self) -> complex:
        return complex(self.location)  # type: ignore[arg-type]


def aberth(coeffs: np.ndarray, tol: Optional[float] = None, max_iter: Optional[int] = None) -> np.ndarray:
    """All roots of the polynomial with coefficients `coeffs` (lowest degree first).

    Roots stop moving once their correction is below tol·(1+|z|) or the
    polynomial value is within rounding of zero there (multiple roots).
    """
    tol = settings.ROOT_TOL if tol is None else tol
    max_iter = settings.ROOT_MAX_ITER if max_iter is None else max_iter

    c = np.asarray(coeffs, dtype=complex)
    n = len(c) - 1
    if n < 1:
        return np.zeros(0, dtype=complex)
    a = c[::-1] / c[-1]
    if n == 1:
        return np.array([-a[1]])

    da = np.polyder(a)
    abs_a = np.abs(a)
    # Cauchy-type bound for the initial circle, rotated off the axes
    radius = 1.0 + np.max(abs_a[1:]) if n > 0 else 1.0
    radius = min(radius, 2.0 * np.max(abs_a[1:] ** (1.0 / np.arange(1, n + 1))) + 1e-3)
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))

    done = np.zeros(n, dtype=bool)
    for iteration in range(max_iter):
        p = np.polyval(a, z)
        dp = np.polyval(da, z)
        rounding = 4.0 * n * _EPS * np.polyval(abs_a, np.abs(z))
        done |= np.abs(p) <= rounding

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        sums = inv.sum(axis=1)

        safe_dp = np.where(dp == 0, _EPS, dp)
        ratio = p / safe_dp
        step = ratio / (1.0 - ratio * sums)
        step = np.where(done, 0.0, step)
        z = z - step

        if np.all(done | (np.abs(step) <= tol * (1.0 + np.abs(z)))):
            logger.debug("aberth converged", extra={"degree": n, "iterations": iteration + 1})
            return z

    raise ConvergenceFailure(
        f"Aberth iteration did not converge in {max_iter} steps",
        degree=n,
        max_step=float(np.max(np.abs(step))),
    )


def _cluster_threshold(multiplicity: int, center: complex, tol: float, degree: int) -> float:
    # an m-fold root under coefficient error δ spreads to about δ^(1/m)
    coefficient_error = 16.0 * max(degree, 1) * _EPS
    scale = 1.0 + abs(center)
    return max(tol * scale, 10.0 * coefficient_error ** (1.0 / multiplicity) * scale)


def cluster(values: np.ndarray, tol: float) -> list[RootCluster]:
    """Group roots into clusters, trying the largest multiplicity first.

    A group of m nearest roots is a cluster when its spread is below the
    m-fold threshold and the next root lies well outside it.
    """
    points = [complex(v) for v in values]
    degree = len(points)
    free = set(range(degree))
    clusters: list[RootCluster] = []

    for m in range(degree, 1, -1):
        for k in range(degree):
            if k not in free or len(free) < m:
                continue
            nearest = sorted(free, key=lambda j: abs(points[j] - points[k]))
            group = nearest[:m]
            center = complex(np.mean([points[j] for j in group]))
            radius = max(abs(points[j] - center) for j in group)
            if radius >= _cluster_threshold(m, center, tol, degree):
                continue
            if len(nearest) > m and abs(points[nearest[m]] - center) <= 3.0 * radius:
                continue
            clusters.append(RootCluster(location=center, multiplicity=m, radius=radius))
            free.difference_update(group)

    for k in sorted(free):
        clusters.append(RootCluster(location=points[k], multiplicity=1))
    return clusters


def _check_separation(clusters: list[RootCluster]) -> None:
    for k, first in enumerate(clusters):
        for second in clusters[k + 1:]:
            gap = abs(first.center - second.center)
            if max(first.radius, second.radius) >= gap / 3.0:
                logger.warning(
                    "root clusters are not well separated",
                    extra={"gap": gap, "radius": max(first.radius, second.radius)},
                )


def _snap(factor: Poly, z: complex, max_denominator: int = 10_000) -> Optional[ExactComplex]:
    """The nearby Gaussian rational when it is an exact root of `factor`."""
    candidate = ExactComplex(
        Fraction(z.real).limit_denominator(max_denominator),
        Fraction(z.imag).limit_denominator(max_denominator),
    )
    if not factor(candidate):
        return candidate
    return None


def roots(
    P: Poly,
    tol: Optional[float] = None,
    cross_check: bool = False,
    cluster_tol: Optional[float] = None,
) -> list[RootCluster]:
    """Root clusters of P with multiplicities summing to deg P.

    Exact polynomials go through a square-free decomposition so multiplicities
    are exact; linear square-free factors also give exact locations. Float
    polynomials cluster their roots, counting roots within cluster_tol as one.
    """
    if P.is_zero:
        raise ZeroPolynomialError("roots of the zero polynomial")
    tol = settings.ROOT_TOL if tol is None else tol
    cluster_tol = tol if cluster_tol is None else cluster_tol
    if P.degree == 0:
        return []

    if P.is_exact:
        clusters: list[RootCluster] = []
        for factor, multiplicity in P.squarefree():
            if factor.degree == 1:
                location = -factor.coeffs[0] / factor.coeffs[1]
                clusters.append(RootCluster(location=location, multiplicity=multiplicity))
                continue
            for z in aberth(factor.to_numpy(), tol):
                snapped = _snap(factor, complex(z))
                if snapped is not None:
                    clusters.append(RootCluster(location=snapped, multiplicity=multiplicity))
                    continue
                error = abs(complex(factor(complex(z)))) / max(abs(complex(factor.derivative()(complex(z)))), _EPS)
                clusters.append(RootCluster(location=complex(z), multiplicity=multiplicity, radius=error))
        if cross_check:
            numeric = cluster(aberth(P.to_numpy(), tol), cluster_tol)
            if sorted(c.multiplicity for c in numeric) != sorted(c.multiplicity for c in clusters):
                logger.warning(
                    "numeric clustering disagrees with square-free decomposition",
                    extra={"polynomial": repr(P)},
                )
        _check_separation(clusters)
        return clusters

    coeffs = list(P.coeffs)
    zero_order = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_order += 1
    found = cluster(aberth(np.array(coeffs), tol), cluster_tol) if len(coeffs) > 1 else []
    if zero_order:
        found.append(RootCluster(location=ExactComplex(0), multiplicity=zero_order))
    _check_separation(found)
    return found


__all__ = ["RootCluster", "aberth", "cluster", "roots"]
