from gaussmap_lab.mesh.grid import ChartGrid
from gaussmap_lab.mesh.obj import ObjFile, read_obj, write_obj
from gaussmap_lab.mesh.quadrature import form_poles, integrate_path, integrate_paths
from gaussmap_lab.mesh.surface import (
    SurfaceMesh,
    boundary_components,
    generate_mesh,
    isothermality_residual,
    normal_deviation,
)

__all__ = [
    "ChartGrid",
    "ObjFile",
    "SurfaceMesh",
    "boundary_components",
    "form_poles",
    "generate_mesh",
    "integrate_path",
    "integrate_paths",
    "isothermality_residual",
    "normal_deviation",
    "read_obj",
    "write_obj",
]
