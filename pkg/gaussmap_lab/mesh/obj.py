"""Wavefront OBJ export with a provenance header, and the matching reader."""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.mesh.surface import SurfaceMesh

HEADER_PREFIX = "# gaussmap-lab"


@dataclass
class ObjFile:
    vertices: np.ndarray
    normals: np.ndarray
    faces: list[tuple[int, ...]]
    header: dict[str, str] = field(default_factory=dict)


def _header(mesh: SurfaceMesh) -> list[str]:
    family = mesh.provenance.get("family", "data")
    params_hash = mesh.provenance.get("params_hash", "-")
    lines = [f"{HEADER_PREFIX} family={family} params-hash={params_hash}"]
    extra = {k: v for k, v in mesh.provenance.items() if k not in {"family", "params_hash"}}
    for key in sorted(extra):
        value = extra[key]
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"# {key.replace('_', '-')}={value}")
    lines.append(f"# closure={mesh.closure:.3e} isothermality={mesh.isothermality:.3e}")
    return lines


def write_obj(mesh: SurfaceMesh, path: Union[str, Path]) -> Path:
    """One "v" and one "vn" line per vertex; faces as 1-indexed v//vn quads."""
    path = Path(path)
    lines = _header(mesh)
    lines.extend(f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in mesh.vertices)
    lines.extend(f"vn {x:.12g} {y:.12g} {z:.12g}" for x, y, z in mesh.normals)
    lines.extend("f " + " ".join(f"{k + 1}//{k + 1}" for k in face) for face in mesh.faces)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def _parse_header(line: str, header: dict[str, str]) -> None:
    body = line[len(HEADER_PREFIX) :] if line.startswith(HEADER_PREFIX) else line[1:]
    for token in body.split():
        if "=" in token:
            key, value = token.split("=", 1)
            header[key] = value


def read_obj(path: Union[str, Path]) -> ObjFile:
    vertices: list[list[float]] = []
    normals: list[list[float]] = []
    faces: list[tuple[int, ...]] = []
    header: dict[str, str] = {}
    for number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            _parse_header(line, header)
            continue
        tag, *fields = line.split()
        try:
            if tag == "v":
                vertices.append([float(v) for v in fields[:3]])
            elif tag == "vn":
                normals.append([float(v) for v in fields[:3]])
            elif tag == "f":
                faces.append(tuple(int(f.split("/")[0]) - 1 for f in fields))
        except ValueError as exc:
            raise InputError(f"malformed OBJ line {number}", line=raw) from exc
    return ObjFile(
        vertices=np.array(vertices, dtype=float).reshape(-1, 3),
        normals=np.array(normals, dtype=float).reshape(-1, 3),
        faces=faces,
        header=header,
    )


__all__ = ["HEADER_PREFIX", "ObjFile", "read_obj", "write_obj"]
