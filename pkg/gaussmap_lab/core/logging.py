# gaussmap_lab/core/logging.py
import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from gaussmap_lab.core.config import settings

_HANDLER_NAME = "gaussmap-lab-stderr"


def setup_logging(level: Optional[str] = None, json_output: Optional[bool] = None) -> None:
    """设置日志配置

    Reports go to stdout, so every handler installed here writes to stderr.
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    use_json = settings.use_json_logs if json_output is None else json_output

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level_name))

    # 清除之前安装的处理器
    root_logger.handlers = [h for h in root_logger.handlers if h.get_name() != _HANDLER_NAME]

    json_formatter = jsonlogger.JsonFormatter(
        "%(timestamp)s %(level)s %(name)s %(message)s",
        rename_fields={"timestamp": "@timestamp", "level": "severity"},
        timestamp=True,
    )
    standard_formatter = logging.Formatter(settings.LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.set_name(_HANDLER_NAME)
    console_handler.setFormatter(json_formatter if use_json else standard_formatter)
    root_logger.addHandler(console_handler)

    # 第三方库
    logging.getLogger("sympy").setLevel(logging.WARNING)

    root_logger.debug(
        "Logging configured",
        extra={"level_name": level_name, "json_output": use_json, "environment": settings.ENVIRONMENT},
    )


class LoggerMixin:
    """日志混入类，为类提供日志功能"""

    @property
    def logger(self) -> logging.Logger:
        return logging.getLogger(self.__class__.__module__ + "." + self.__class__.__name__)
