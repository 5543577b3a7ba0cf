"""verify: the full certificate of a named family instance."""
from typing import Optional

import click

from gaussmap_lab.commands.common import emit, finish, load_json
from gaussmap_lab.families.registry import get_family, verify_canonical
from gaussmap_lab.schemas import CanonicalReportOut, CertificateOut, ParamsIn, VerifyOut
from gaussmap_lab.solver.certificate import verify_solution


@click.command("verify")
@click.option("--family", "family_id", required=True, help="Family id, see list-families.")
@click.option("--params", "params_json", default=None, help="Parameter object, or @file. Defaults to the reference instance.")
@click.option("--tol", type=float, default=None, help="Period tolerance (settings.PERIOD_TOL).")
@click.option("--contour-nodes", type=click.IntRange(min=8), default=None, help="Nodes per residue contour (settings.CONTOUR_NODES).")
@click.option("--mode", type=click.Choice(["auto", "exact", "numeric"]), default="auto", show_default=True)
@click.pass_context
def command(
    ctx: click.Context,
    family_id: str,
    params_json: Optional[str],
    tol: Optional[float],
    contour_nodes: Optional[int],
    mode: str,
) -> None:
    family = get_family(family_id)
    raw = load_json(params_json, "--params")
    params = None if raw is None else ParamsIn.model_validate(raw).to_dict()

    certificate = verify_solution(family.id, params, tol=tol, mode=mode, nodes=contour_nodes)
    canonical = CanonicalReportOut.model_validate(verify_canonical(family.id)) if family.canonical else None

    emit(VerifyOut(passed=certificate.passed, certificate=CertificateOut.model_validate(certificate), canonical=canonical))
    finish(ctx, certificate.passed)
