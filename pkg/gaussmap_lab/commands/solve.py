"""solve: Levenberg–Marquardt on a family's period system, or on the Case 2 obstruction system."""
import dataclasses
from typing import Optional

import click

from gaussmap_lab.commands.common import emit, finish, load_json, threads
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.schemas import SolveResultOut, SolveSpec
from gaussmap_lab.solver.lm import SOLVED, SolveConfig, solve
from gaussmap_lab.solver.system import ConstraintSystem, case_two_system


@click.command("solve")
@click.option("--spec", "spec_json", default=None, help="Solve spec, or @file.")
@click.option("--case-two", is_flag=True, help="Run the Case 2 system over (τ, U) instead of a spec.")
@click.option("--min-modulus", default=0.1, show_default=True, type=float, help="|U| barrier for --case-two.")
@click.option("--seed", default=None, type=int, help="Overrides the seed of the solve spec.")
@click.pass_context
def command(
    ctx: click.Context,
    spec_json: Optional[str],
    case_two: bool,
    min_modulus: float,
    seed: Optional[int],
) -> None:
    if case_two == (spec_json is not None):
        raise InputError("give exactly one of --spec and --case-two")

    if case_two:
        system = case_two_system(min_modulus)
        config = SolveConfig()
    else:
        spec = SolveSpec.model_validate(load_json(spec_json, "--spec"))
        system = ConstraintSystem.from_spec(spec)
        config = SolveConfig.from_spec(spec)
    overrides = {"threads": threads(ctx)}
    if seed is not None:
        overrides["seed"] = seed
    result = solve(system, dataclasses.replace(config, **overrides))

    emit(SolveResultOut.model_validate(result))
    finish(ctx, result.status == SOLVED)
