import logging

import pytest
from pydantic import ValidationError
from pythonjsonlogger import jsonlogger

from gaussmap_lab.core.config import Settings
from gaussmap_lab.core.logging import setup_logging


def test_tolerances_must_be_positive():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, PERIOD_TOL=0.0)


def test_contour_nodes_have_a_floor():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, CONTOUR_NODES=8)


def test_unknown_log_level_is_rejected():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, LOG_LEVEL="chatty")


def test_json_logs_follow_environment(fresh_settings):
    development = fresh_settings(ENVIRONMENT="development")
    production = fresh_settings(ENVIRONMENT=" Production ")

    assert development.use_json_logs is False
    assert production.is_production is True
    assert production.use_json_logs is True
    assert fresh_settings(ENVIRONMENT="production", LOG_JSON=False).use_json_logs is False


def test_environment_prefix_is_read(monkeypatch):
    monkeypatch.setenv("GAUSSMAP_LAB_THREADS", "3")
    monkeypatch.setenv("GAUSSMAP_LAB_SOLVER_STARTS", "7")

    settings = Settings(_env_file=None)

    assert settings.THREADS == 3
    assert settings.SOLVER_STARTS == 7


def test_setup_logging_installs_one_stderr_handler():
    setup_logging("DEBUG", True)
    setup_logging("WARNING", True)

    root = logging.getLogger()
    handlers = [h for h in root.handlers if h.get_name() == "gaussmap-lab-stderr"]
    assert len(handlers) == 1
    assert isinstance(handlers[0].formatter, jsonlogger.JsonFormatter)
    assert root.level == logging.WARNING

    setup_logging("INFO", False)
    handlers = [h for h in root.handlers if h.get_name() == "gaussmap-lab-stderr"]
    assert not isinstance(handlers[0].formatter, jsonlogger.JsonFormatter)
