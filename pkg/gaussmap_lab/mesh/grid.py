"""Chart grids over the punctured sphere with exclusion disks and a spanning tree."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Optional

import numpy as np

from gaussmap_lab.algebra.points import is_inf
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.schemas.grid import GridSpec

logger = logging.getLogger(__name__)

POLAR = "polar"
RECT = "rect"


@dataclass(frozen=True)
class TreeEdge:
    parent: int
    child: int
    edge: int
    sign: int


@dataclass(frozen=True)
class ChartGrid:
    """Nodes z[i, j]; for polar grids i runs over radii and j wraps around the circle."""

    kind: str
    nodes: np.ndarray
    mask: np.ndarray
    steps: tuple[float, float]
    center: complex
    exclusion: float
    excluded: tuple[complex, ...]
    base: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.nodes.shape  # type: ignore[return-value]

    @property
    def periodic(self) -> bool:
        return self.kind == POLAR

    def flat(self, i: int, j: int) -> int:
        return i * self.shape[1] + j

    def neighbor(self, i: int, j: int, di: int, dj: int) -> Optional[tuple[int, int]]:
        ni, nj = self.shape
        i2, j2 = i + di, j + dj
        if self.periodic:
            j2 %= nj
        if not (0 <= i2 < ni and 0 <= j2 < nj):
            return None
        return (i2, j2) if self.mask[i2, j2] else None

    def edges(self) -> np.ndarray:
        """(u, v) flat index pairs between valid neighbours: along i first, then along j."""
        out = []
        ni, nj = self.shape
        for i in range(ni):
            for j in range(nj):
                if not self.mask[i, j]:
                    continue
                for di, dj in ((1, 0), (0, 1)):
                    other = self.neighbor(i, j, di, dj)
                    if other is not None and other != (i, j):
                        out.append((self.flat(i, j), self.flat(*other)))
        return np.array(out, dtype=int).reshape(-1, 2)

    def faces(self) -> list[tuple[int, int, int, int]]:
        """Counterclockwise quads in the chart with all four corners valid."""
        out = []
        ni, nj = self.shape
        for i in range(ni - 1):
            for j in range(nj if self.periodic else nj - 1):
                j1 = (j + 1) % nj
                corners = ((i, j), (i + 1, j), (i + 1, j1), (i, j1))
                if all(self.mask[c] for c in corners):
                    out.append(tuple(self.flat(*c) for c in corners))  # type: ignore[arg-type]
        return out

    def spanning_tree(self, edges: np.ndarray) -> tuple[list[TreeEdge], np.ndarray]:
        """Breadth-first tree from the base node, radial steps before angular ones.

        Returns the tree edges in visiting order and the reached-node mask (flat).
        """
        ni, nj = self.shape
        lookup: dict[tuple[int, int], int] = {}
        for k, (u, v) in enumerate(edges):
            lookup[(int(u), int(v))] = k
            lookup[(int(v), int(u))] = k

        reached = np.zeros(ni * nj, dtype=bool)
        reached[self.base] = True
        order: list[TreeEdge] = []
        queue = deque([self.base])
        while queue:
            u = queue.popleft()
            i, j = divmod(u, nj)
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                other = self.neighbor(i, j, di, dj)
                if other is None:
                    continue
                v = self.flat(*other)
                if reached[v]:
                    continue
                k = lookup[(u, v)]
                reached[v] = True
                order.append(TreeEdge(parent=u, child=v, edge=k, sign=1 if int(edges[k][0]) == u else -1))
                queue.append(v)
        return order, reached

    def chart_distance(self, z: np.ndarray, point: complex) -> np.ndarray:
        """Distance to a point measured in the chart used for difference stencils."""
        d = np.abs(z - point)
        if self.kind == POLAR:
            return d / np.abs(z - self.center)
        return d

    # construction
    @classmethod
    def build(
        cls,
        kind: str,
        nodes: np.ndarray,
        steps: tuple[float, float],
        center: complex,
        exclusion: float,
        avoid: Iterable[Any],
        basepoint: Optional[complex],
    ) -> "ChartGrid":
        excluded = tuple(complex(p) for p in avoid if not is_inf(p))
        mask = np.isfinite(nodes)
        for p in excluded:
            mask &= np.abs(nodes - p) >= exclusion
        if not mask.any():
            raise InputError("every grid node lies inside an exclusion disk")
        flat_nodes = nodes.ravel()
        candidates = np.flatnonzero(mask.ravel())
        target = complex(basepoint) if basepoint is not None else flat_nodes[candidates[0]]
        base = int(candidates[np.argmin(np.abs(flat_nodes[candidates] - target))])
        return cls(
            kind=kind,
            nodes=nodes,
            mask=mask,
            steps=steps,
            center=complex(center),
            exclusion=exclusion,
            excluded=excluded,
            base=base,
        )

    @classmethod
    def polar(
        cls,
        center: complex = 0j,
        r_min: float = 0.2,
        r_max: float = 5.0,
        radial: int = 32,
        angular: int = 64,
        exclusion: Optional[float] = None,
        avoid: Iterable[Any] = (),
        basepoint: Optional[complex] = None,
    ) -> "ChartGrid":
        rho = np.linspace(np.log(r_min), np.log(r_max), radial)
        theta = 2 * np.pi * np.arange(angular) / angular
        nodes = complex(center) + np.exp(rho)[:, None] * np.exp(1j * theta)[None, :]
        steps = (float(rho[1] - rho[0]), float(2 * np.pi / angular))
        return cls.build(
            POLAR,
            nodes,
            steps,
            complex(center),
            settings.MESH_EXCLUSION_RADIUS if exclusion is None else exclusion,
            avoid,
            basepoint,
        )

    @classmethod
    def rect(
        cls,
        window: tuple[float, float, float, float],
        nx: int = 81,
        ny: int = 81,
        exclusion: Optional[float] = None,
        avoid: Iterable[Any] = (),
        basepoint: Optional[complex] = None,
    ) -> "ChartGrid":
        x0, x1, y0, y1 = window
        xs, ys = np.linspace(x0, x1, nx), np.linspace(y0, y1, ny)
        nodes = xs[:, None] + 1j * ys[None, :]
        steps = (float(xs[1] - xs[0]), float(ys[1] - ys[0]))
        center = complex((x0 + x1) / 2, (y0 + y1) / 2)
        return cls.build(
            RECT,
            nodes,
            steps,
            center,
            settings.MESH_EXCLUSION_RADIUS if exclusion is None else exclusion,
            avoid,
            center if basepoint is None else basepoint,
        )

    @classmethod
    def from_spec(cls, spec: GridSpec, avoid: Iterable[Any] = ()) -> "ChartGrid":
        basepoint = None if spec.basepoint is None else complex(spec.basepoint)
        if spec.kind == POLAR:
            return cls.polar(
                center=complex(spec.center),
                r_min=spec.r_min,
                r_max=spec.r_max,
                radial=spec.radial,
                angular=spec.angular,
                exclusion=spec.exclusion,
                avoid=avoid,
                basepoint=basepoint,
            )
        assert spec.window is not None
        return cls.rect(spec.window, spec.nx, spec.ny, spec.exclusion, avoid, basepoint)


__all__ = ["POLAR", "RECT", "ChartGrid", "TreeEdge"]
