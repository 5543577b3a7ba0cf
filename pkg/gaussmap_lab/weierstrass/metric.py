"""Regularity of ds² = (1 + |g|²)²|ω|², completeness at the ends, and curvature."""
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from gaussmap_lab.algebra.points import INF, SpherePoint, as_point, is_inf, point_label, same_point
from gaussmap_lab.algebra.roots import roots
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import MetricSingular
from gaussmap_lab.weierstrass.data import WeierstrassData, pole_order


@dataclass(frozen=True)
class MetricReport:
    degenerate_points: tuple[SpherePoint, ...]
    end_orders: dict[str, int] = field(default_factory=dict)
    end_points: tuple[SpherePoint, ...] = field(default_factory=tuple)

    @property
    def regular(self) -> bool:
        return not self.degenerate_points

    @property
    def complete(self) -> bool:
        return all(k <= -1 for k in self.end_orders.values())


def _special_points(data: WeierstrassData) -> list[SpherePoint]:
    """Poles of g, zeros of h, and ∞: the only places where ord ω ≠ 2 m can happen."""
    points: list[SpherePoint] = [INF]
    for P in (data.g.den, data.h.num):
        if P.is_constant:
            continue
        for c in roots(P):
            if not any(same_point(c.location, q, settings.POINT_MATCH_TOL) for q in points):
                points.append(c.location)
    return points


def end_order(data: WeierstrassData, p: SpherePoint) -> int:
    """k_p = ord_p ω − 2 m_p."""
    return data.omega.order_at(p) - 2 * pole_order(data.g, p)


def regularity_and_completeness(data: WeierstrassData) -> MetricReport:
    degenerate = []
    for p in _special_points(data):
        if not data.dom.contains(p):
            continue
        if end_order(data, p) != 0:
            degenerate.append(p)
    orders = {point_label(p): end_order(data, p) for p in data.dom.punctures}
    return MetricReport(
        degenerate_points=tuple(degenerate),
        end_orders=orders,
        end_points=data.dom.punctures,
    )


def total_curvature(data: WeierstrassData) -> int:
    """∫K dA in units of π: −4 deg g."""
    return -4 * data.g.degree


def gauss_normal(values: np.ndarray) -> np.ndarray:
    """Inverse stereographic projection of g-values, last axis = (x, y, z)."""
    g = np.asarray(values, dtype=complex)
    modulus = np.abs(g) ** 2
    out = np.stack([2 * g.real, 2 * g.imag, modulus - 1], axis=-1)
    return out / (1 + modulus)[..., None]


@dataclass(frozen=True)
class PointGeometry:
    curvature: float
    normal: tuple[float, float, float]


def pointwise_geometry(data: WeierstrassData, z: Any) -> PointGeometry:
    """K = −4|g′/h|²/(1+|g|²)⁴ and the unit normal at an interior point."""
    z = as_point(z)
    if is_inf(z) or not data.dom.contains(z):
        raise MetricSingular(f"{z} is not an interior affine point", point=str(z))
    gz, hz = data.g.eval(z), data.h.eval(z)
    if is_inf(gz) or is_inf(hz):
        raise MetricSingular(f"g or h has a pole at {z}", point=str(z))
    g_val, h_val = complex(gz), complex(hz)
    if abs(h_val) == 0.0:
        raise MetricSingular(f"the metric vanishes at {z}", point=str(z))
    dg = data.g.derivative().eval(z)
    curvature = -4.0 * abs(complex(dg) / h_val) ** 2 / (1.0 + abs(g_val) ** 2) ** 4
    normal = gauss_normal(np.array([g_val]))[0]
    return PointGeometry(curvature=float(curvature), normal=(float(normal[0]), float(normal[1]), float(normal[2])))


__all__ = [
    "MetricReport",
    "PointGeometry",
    "end_order",
    "gauss_normal",
    "pointwise_geometry",
    "regularity_and_completeness",
    "total_curvature",
]
