"""analyze: totally ramified values and the bound checks of an arbitrary rational map."""
import logging
from typing import Optional

import click
from pydantic import TypeAdapter

from gaussmap_lab.commands.common import emit, finish, load_json
from gaussmap_lab.schemas import AllocationOut, AnalyzeOut, BoundCheckOut, PointValue, PuncturesIn, RationalMapIn, TRReportOut
from gaussmap_lab.sphere.allocation import classify_allocation
from gaussmap_lab.sphere.bounds import check_bounds
from gaussmap_lab.sphere.report import tr_report

logger = logging.getLogger(__name__)

_points = TypeAdapter(list[PointValue])


@click.command("analyze")
@click.option("--map", "map_json", required=True, help='Rational map {"num": [...], "den": [...]}, or @file.')
@click.option("--punctures", "punctures_json", default="[]", show_default=True, help="Puncture list, or @file.")
@click.option("--omitted", "omitted_json", default=None, help="Values whose end allocation should be classified.")
@click.option("--genus", default=0, show_default=True, type=click.IntRange(min=0))
@click.option("--minimal-surface", is_flag=True, help="Also check the bounds that need a complete minimal surface.")
@click.option("--tol", type=float, default=None, help="Root clustering tolerance (settings.ROOT_TOL).")
@click.pass_context
def command(
    ctx: click.Context,
    map_json: str,
    punctures_json: str,
    omitted_json: Optional[str],
    genus: int,
    minimal_surface: bool,
    tol: Optional[float],
) -> None:
    g = RationalMapIn.model_validate(load_json(map_json, "--map")).to_map()
    dom = PuncturesIn.model_validate(load_json(punctures_json, "--punctures")).to_domain()
    report = tr_report(g, dom, tol=tol)
    bounds = check_bounds(report, genus=genus, minimal_surface=minimal_surface)

    allocation = None
    if omitted_json is not None:
        values = _points.validate_python(load_json(omitted_json, "--omitted"))
        allocation = AllocationOut.model_validate(classify_allocation(g, dom, values))

    logger.info("map analyzed", extra={"degree": report.degree, "D": report.D, "R": report.R})
    emit(
        AnalyzeOut(
            passed=bounds.passed,
            tr=TRReportOut.model_validate(report),
            bounds=BoundCheckOut.model_validate(bounds),
            allocation=allocation,
        )
    )
    finish(ctx, bounds.passed)
