"""bounds: the seeded random suite over the totally-ramified bounds."""

import click

from gaussmap_lab.commands.common import emit, finish, threads
from gaussmap_lab.schemas import SuiteOut
from gaussmap_lab.sphere.suite import bound_suite


@click.command("bounds")
@click.option("--count", default=200, show_default=True, type=click.IntRange(min=1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--max-degree", default=6, show_default=True, type=click.IntRange(min=1))
@click.option("--max-punctures", default=4, show_default=True, type=click.IntRange(min=0))
@click.pass_context
def command(ctx: click.Context, count: int, seed: int, max_degree: int, max_punctures: int) -> None:
    result = bound_suite(count, seed, max_degree, max_punctures, threads=threads(ctx))
    emit(
        SuiteOut(
            seed=result.seed,
            count=result.count,
            passed=result.passed,
            violations=result.violations,
            skipped=len(result.skipped),
            max_surjective_nu=result.max_surjective_nu,
            sharp=len(result.sharp),
        )
    )
    finish(ctx, result.passed)
