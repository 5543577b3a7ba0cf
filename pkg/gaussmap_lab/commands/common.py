import json
from pathlib import Path
from typing import Any, Optional

import click
from pydantic import BaseModel

from gaussmap_lab.core.exceptions import InputError

# exit codes
OK = 0
VERDICT_FAILED = 1
INPUT_FAILED = 2


def load_json(value: Optional[str], option: str) -> Any:
    """
    解析 JSON 参数

    Args:
        value: 内联 JSON，或以 "@" 开头的文件路径
        option: 选项名，用于错误信息

    Returns:
        解析后的对象；未提供时为 None
    """
    if value is None:
        return None
    text = value
    if value.startswith("@"):
        path = Path(value[1:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"{option}: cannot read {path}", path=str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{option}: invalid JSON ({exc.msg})", line=exc.lineno, column=exc.colno) from exc


def emit(report: BaseModel) -> None:
    click.echo(json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False))


def finish(ctx: click.Context, passed: bool) -> None:
    ctx.exit(OK if passed else VERDICT_FAILED)


def threads(ctx: click.Context) -> Optional[int]:
    return (ctx.obj or {}).get("threads")


__all__ = ["INPUT_FAILED", "OK", "VERDICT_FAILED", "emit", "finish", "load_json", "threads"]
