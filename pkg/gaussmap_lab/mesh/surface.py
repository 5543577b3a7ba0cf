"""f = Re ∫ α over a chart grid: vertices, normals, cycle closure and isothermality."""
import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Union

import numpy as np

from gaussmap_lab.algebra.points import is_inf, point_label
from gaussmap_lab.algebra.roots import roots
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import PeriodFailure
from gaussmap_lab.mesh.grid import POLAR, ChartGrid
from gaussmap_lab.mesh.quadrature import Segments, integrate_paths
from gaussmap_lab.schemas.grid import GridSpec
from gaussmap_lab.tasks.worker import parallel_map
from gaussmap_lab.weierstrass.data import AlphaForm, WeierstrassData, alpha
from gaussmap_lab.weierstrass.metric import gauss_normal
from gaussmap_lab.weierstrass.period import period_report

logger = logging.getLogger(__name__)

_CHUNK = 512
# first-derivative central stencil over offsets -3..3
_STENCIL = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0
_STENCIL_CLEARANCE = 10.0


@dataclass
class SurfaceMesh:
    vertices: np.ndarray
    normals: np.ndarray
    faces: list[tuple[int, ...]]
    chart: np.ndarray
    closure: float
    diameter: float
    isothermality: float
    boundary_components: int
    cycles: int
    provenance: dict[str, Any] = field(default_factory=dict)

    @property
    def closure_ok(self) -> bool:
        return self.closure <= settings.MESH_CLOSURE_TOL * max(self.diameter, 1.0)


def singular_points(data: WeierstrassData, A: Optional[AlphaForm] = None) -> list[complex]:
    """Finite punctures and finite poles of α."""
    A = A or alpha(data)
    points = [complex(p) for p in data.dom.punctures if not is_inf(p)]
    for component in A.components:
        if component.den.is_constant:
            continue
        for c in roots(component.den):
            z = c.center
            if all(abs(z - q) > settings.POINT_MATCH_TOL for q in points):
                points.append(z)
    return points


def _integrate_edges(A: AlphaForm, grid: ChartGrid, edges: np.ndarray, threads: Optional[int]) -> np.ndarray:
    z = grid.nodes.ravel()
    chunks = [edges[k : k + _CHUNK] for k in range(0, len(edges), _CHUNK)]
    poles = list(grid.excluded)

    def work(chunk: np.ndarray) -> np.ndarray:
        return integrate_paths(A, Segments(z[chunk[:, 0]], z[chunk[:, 1]]), poles=poles)

    parts = parallel_map(work, chunks, threads)
    return np.concatenate(parts, axis=1) if parts else np.zeros((3, 0), dtype=complex)


def _derivative(values: np.ndarray, grid: ChartGrid, axis: int) -> tuple[np.ndarray, np.ndarray]:
    """Seven-point central differences along one chart axis; (derivative, usable mask)."""
    ni, nj = grid.shape
    out = np.zeros_like(values)
    usable = grid.mask.copy()
    for offset, weight in zip(range(-3, 4), _STENCIL):
        if axis == 1 and grid.periodic:
            shifted = np.roll(values, -offset, axis=1)
            shifted_mask = np.roll(grid.mask, -offset, axis=1)
        else:
            shifted = np.zeros_like(values)
            shifted_mask = np.zeros_like(grid.mask)
            n = ni if axis == 0 else nj
            lo, hi = max(0, -offset), min(n, n - offset)
            src = slice(lo + offset, hi + offset)
            dst = slice(lo, hi)
            if axis == 0:
                shifted[dst] = values[src]
                shifted_mask[dst] = grid.mask[src]
            else:
                shifted[:, dst] = values[:, src]
                shifted_mask[:, dst] = grid.mask[:, src]
        usable &= shifted_mask
        out += weight * shifted
    return out / grid.steps[axis], usable


def isothermality_residual(grid: ChartGrid, positions: np.ndarray) -> float:
    """max over interior nodes of max(| |f_u|² − |f_v|² |, 2|⟨f_u, f_v⟩|) / (|f_u|² + |f_v|²).

    Interior nodes have a full stencil on both axes and sit at least ten grid
    steps, in chart distance, from every excluded point.
    """
    values = np.zeros(grid.shape + (3,))
    values[grid.mask] = positions
    fu, mask_u = _derivative(values, grid, 0)
    fv, mask_v = _derivative(values, grid, 1)
    interior = mask_u & mask_v
    reach = _STENCIL_CLEARANCE * max(grid.steps)
    for p in grid.excluded:
        if grid.kind == POLAR and abs(p - grid.center) < 1e-12:
            continue
        interior &= grid.chart_distance(grid.nodes, p) >= reach
    if not interior.any():
        return 0.0
    a, b = fu[interior], fv[interior]
    aa, bb, ab = (a * a).sum(-1), (b * b).sum(-1), (a * b).sum(-1)
    scale = aa + bb
    residual = np.maximum(np.abs(aa - bb), 2 * np.abs(ab)) / np.where(scale > 0, scale, 1.0)
    return float(residual.max())


def boundary_components(faces: list[tuple[int, ...]]) -> int:
    """Connected components of the edges used by exactly one face."""
    counts: dict[tuple[int, int], int] = {}
    for face in faces:
        for a, b in zip(face, face[1:] + face[:1]):
            key = (min(a, b), max(a, b))
            counts[key] = counts.get(key, 0) + 1
    boundary = [e for e, c in counts.items() if c == 1]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in boundary:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in parent})


def normal_deviation(mesh: SurfaceMesh) -> float:
    """Largest angle in degrees between a face normal and the mean of its vertex normals."""
    worst = 0.0
    for face in mesh.faces:
        p = mesh.vertices[list(face)]
        n = np.cross(p[2] - p[0], p[3] - p[1]) if len(face) == 4 else np.cross(p[1] - p[0], p[2] - p[0])
        m = mesh.normals[list(face)].mean(axis=0)
        denom = np.linalg.norm(n) * np.linalg.norm(m)
        if denom == 0:
            continue
        angle = np.degrees(np.arccos(np.clip(np.dot(n, m) / denom, -1.0, 1.0)))
        worst = max(worst, float(angle))
    return worst


def _normals(data: WeierstrassData, z: np.ndarray) -> np.ndarray:
    g = data.g.evaluate(z)
    pole = ~np.isfinite(g) | (np.abs(g) > 1e150)
    out = gauss_normal(np.where(pole, 0, g))
    out[pole] = (0.0, 0.0, 1.0)
    return out


def generate_mesh(
    data: WeierstrassData,
    grid: Union[ChartGrid, GridSpec],
    allow_period_failure: bool = False,
    provenance: Optional[dict[str, Any]] = None,
    threads: Optional[int] = None,
) -> SurfaceMesh:
    periods = period_report(data, tol=settings.MESH_PERIOD_TOL)
    if not periods.passed:
        failing = [e.label for e in periods.failing()]
        if not allow_period_failure:
            raise PeriodFailure("α has non-real residues; f would be multivalued", failing=failing)
        logger.warning(
            "PERIOD CONDITION FAILS: the mesh depends on the spanning tree and does not close",
            extra={"failing": failing, "max_im": periods.max_im},
        )

    A = alpha(data)
    if isinstance(grid, GridSpec):
        grid = ChartGrid.from_spec(grid, avoid=singular_points(data, A))

    edges = grid.edges()
    integrals = _integrate_edges(A, grid, edges, threads)
    tree, reached = grid.spanning_tree(edges)

    ni, nj = grid.shape
    F = np.zeros((3, ni * nj), dtype=complex)
    in_tree = np.zeros(len(edges), dtype=bool)
    for step in tree:
        F[:, step.child] = F[:, step.parent] + step.sign * integrals[:, step.edge]
        in_tree[step.edge] = True

    dropped = int(grid.mask.sum() - reached.sum())
    if dropped:
        logger.warning("grid nodes unreachable from the basepoint dropped", extra={"dropped": dropped})
        grid = ChartGrid(
            kind=grid.kind,
            nodes=grid.nodes,
            mask=reached.reshape(grid.shape),
            steps=grid.steps,
            center=grid.center,
            exclusion=grid.exclusion,
            excluded=grid.excluded,
            base=grid.base,
        )

    cycle_edges = [k for k in range(len(edges)) if not in_tree[k] and reached[edges[k][0]] and reached[edges[k][1]]]
    closure = 0.0
    if cycle_edges:
        u, v = edges[cycle_edges, 0], edges[cycle_edges, 1]
        gaps = np.real(F[:, u] + integrals[:, cycle_edges] - F[:, v])
        closure = float(np.max(np.linalg.norm(gaps, axis=0)))

    flat_mask = grid.mask.ravel()
    index = -np.ones(ni * nj, dtype=int)
    index[flat_mask] = np.arange(int(flat_mask.sum()))
    chart = grid.nodes.ravel()[flat_mask]
    vertices = np.real(F[:, flat_mask]).T
    faces = [tuple(int(index[k]) for k in face) for face in grid.faces()]
    span = vertices.max(axis=0) - vertices.min(axis=0) if len(vertices) else np.zeros(3)

    mesh = SurfaceMesh(
        vertices=vertices,
        normals=_normals(data, chart),
        faces=faces,
        chart=chart,
        closure=closure,
        diameter=float(np.linalg.norm(span)),
        isothermality=isothermality_residual(grid, vertices),
        boundary_components=boundary_components(faces),
        cycles=len(cycle_edges),
        provenance=dict(provenance or {}),
    )
    mesh.provenance.setdefault("ends", [point_label(p) for p in data.dom.punctures])

    if not mesh.closure_ok:
        if not allow_period_failure:
            raise PeriodFailure("grid cycles do not close", closure=mesh.closure, diameter=mesh.diameter)
        logger.warning("grid cycles do not close", extra={"closure": mesh.closure, "diameter": mesh.diameter})

    logger.info(
        "mesh generated",
        extra={
            "vertices": len(mesh.vertices),
            "faces": len(mesh.faces),
            "closure": mesh.closure,
            "isothermality": mesh.isothermality,
        },
    )
    return mesh


__all__ = [
    "SurfaceMesh",
    "boundary_components",
    "generate_mesh",
    "isothermality_residual",
    "normal_deviation",
    "singular_points",
]
