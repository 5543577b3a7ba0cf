"""mesh: integrate the Weierstrass representation over a chart grid and write an OBJ file."""
from pathlib import Path
from typing import Any, Optional

import click

from gaussmap_lab.commands.common import emit, finish, load_json, threads
from gaussmap_lab.core.exceptions import InputError, Unsupported
from gaussmap_lab.families.registry import build, get_family
from gaussmap_lab.mesh.obj import write_obj
from gaussmap_lab.mesh.surface import generate_mesh
from gaussmap_lab.schemas import GridSpec, MeshSummaryOut, ParamsIn, WeierstrassDataIn
from gaussmap_lab.schemas.scalar import dump_scalar
from gaussmap_lab.utils.hashing import provenance_hash


@click.command("mesh")
@click.option("--family", "family_id", default=None, help="Family id with Weierstrass data.")
@click.option("--params", "params_json", default=None, help="Family parameters, or @file.")
@click.option("--data", "data_json", default=None, help='Weierstrass data {"g": ..., "omega": ..., "punctures": [...]}, or @file.')
@click.option("--grid", "grid_json", default=None, help="Grid spec, or @file. Defaults to a polar grid around 0.")
@click.option("--out", "out", required=True, type=click.Path(dir_okay=False, path_type=Path))
@click.option("--allow-period-failure", is_flag=True, help="Write the mesh even when the periods do not vanish.")
@click.pass_context
def command(
    ctx: click.Context,
    family_id: Optional[str],
    params_json: Optional[str],
    data_json: Optional[str],
    grid_json: Optional[str],
    out: Path,
    allow_period_failure: bool,
) -> None:
    if (family_id is None) == (data_json is None):
        raise InputError("give exactly one of --family and --data")

    raw_grid = load_json(grid_json, "--grid")
    grid = GridSpec() if raw_grid is None else GridSpec.model_validate(raw_grid)

    provenance: dict[str, Any] = {"grid": grid.kind}
    if family_id is not None:
        family = get_family(family_id)
        raw = load_json(params_json, "--params")
        instance = build(family.id, None if raw is None else ParamsIn.model_validate(raw).to_dict())
        if instance.data is None:
            raise Unsupported(f"{family.id} carries no Weierstrass data", family=family.id)
        data = instance.data
        payload: Any = {name: dump_scalar(value) for name, value in instance.params.items()}
        provenance["family"] = family.id
    else:
        raw_data = load_json(data_json, "--data")
        data = WeierstrassDataIn.model_validate(raw_data).to_data()
        payload = raw_data
        provenance["family"] = "data"
    provenance["params_hash"] = provenance_hash({"params": payload, "grid": grid.fingerprint()})

    mesh = generate_mesh(data, grid, allow_period_failure=allow_period_failure, provenance=provenance, threads=threads(ctx))
    path = write_obj(mesh, out)

    emit(
        MeshSummaryOut(
            path=str(path),
            vertices=len(mesh.vertices),
            faces=len(mesh.faces),
            cycles=mesh.cycles,
            closure=mesh.closure,
            diameter=mesh.diameter,
            closure_ok=mesh.closure_ok,
            isothermality=mesh.isothermality,
            boundary_components=mesh.boundary_components,
            provenance=mesh.provenance,
        )
    )
    finish(ctx, mesh.closure_ok)
