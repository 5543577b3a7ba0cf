import json
import logging
import sys
from typing import Any, Optional, Sequence

import click
from pydantic import ValidationError

from gaussmap_lab.commands import analyze, bounds, list_families, mesh, solve, verify
from gaussmap_lab.commands.common import INPUT_FAILED, OK, VERDICT_FAILED, emit
from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import GaussmapError, InputError, StructuralViolation
from gaussmap_lab.core.logging import setup_logging
from gaussmap_lab.schemas import ErrorOut

logger = logging.getLogger(__name__)


def _report_error(error: GaussmapError) -> None:
    logger.error(error.detail, extra={"error": error.code})
    emit(ErrorOut(**error.to_dict()))


class GaussmapGroup(click.Group):
    """Turns library errors into the JSON error object and exit code 2.

    A structural violation is a failed verdict, so it exits with 1.
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except StructuralViolation as exc:
            _report_error(exc)
            ctx.exit(VERDICT_FAILED)
        except ValidationError as exc:
            _report_error(InputError("invalid input", errors=exc.errors(include_url=False)))
            ctx.exit(INPUT_FAILED)
        except GaussmapError as exc:
            _report_error(exc)
            ctx.exit(INPUT_FAILED)


@click.group(cls=GaussmapGroup, name="gaussmap-lab")
@click.version_option(settings.VERSION, prog_name=settings.PROJECT_NAME)
@click.option("--log-level", default=None, type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
@click.option("--log-json/--no-log-json", default=None, help="JSON log lines on stderr.")
@click.option("--threads", default=None, type=click.IntRange(min=1), help="Worker threads (GAUSSMAP_LAB_THREADS).")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str], log_json: Optional[bool], threads: Optional[int]) -> None:
    """Gauss maps, totally ramified values and minimal surfaces of finite total curvature."""
    setup_logging(log_level, log_json)
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads


cli.add_command(analyze.command)
cli.add_command(verify.command)
cli.add_command(bounds.command)
cli.add_command(solve.command)
cli.add_command(mesh.command)
cli.add_command(list_families.command)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    运行命令行

    Args:
        argv: 参数列表，默认读取 sys.argv

    Returns:
        退出码：0 全部通过，1 判定失败，2 输入错误
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        code = cli.main(args=args, prog_name="gaussmap-lab", standalone_mode=False)
    except click.exceptions.Abort:
        return INPUT_FAILED
    except click.ClickException as exc:
        click.echo(json.dumps({"error": "usage_error", "detail": exc.format_message()}))
        return INPUT_FAILED
    return OK if code is None else int(code)


if __name__ == "__main__":
    sys.exit(run())
