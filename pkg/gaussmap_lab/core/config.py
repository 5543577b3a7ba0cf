import os
from typing import Optional

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def _default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))


class Settings(BaseSettings):
    PROJECT_NAME: str = "gaussmap-lab"
    VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"
    DEBUG: bool = False

    THREADS: int = _default_threads()

    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_JSON: Optional[bool] = None

    # value identification and root finding
    DEFAULT_TOL: float = 1e-9
    ROOT_TOL: float = 1e-12
    ROOT_MAX_ITER: int = 500
    POINT_MATCH_TOL: float = 1e-6

    # residues and periods
    CONTOUR_NODES: int = 512
    RESIDUE_STRICT: bool = False
    PERIOD_TOL: float = 1e-9

    SOLVER_MAX_ITER: int = 200
    SOLVER_RESIDUAL_TOL: float = 1e-10
    SOLVER_STARTS: int = 64
    SOLVER_SEED: int = 0
    SOLVER_BOX: float = 3.0

    QUADRATURE_NODES: int = 16
    QUADRATURE_TOL: float = 1e-10
    MESH_EXCLUSION_RADIUS: float = 0.05
    MESH_PERIOD_TOL: float = 1e-8
    MESH_CLOSURE_TOL: float = 1e-6

    model_config = SettingsConfigDict(
        env_prefix="GAUSSMAP_LAB_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    @field_validator("ENVIRONMENT", mode="before")
    @classmethod
    def normalize_environment(cls, value: str) -> str:
        return value.strip().lower()

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, value: str) -> str:
        return value.strip().upper()

    @model_validator(mode="after")
    def validate_ranges(self) -> "Settings":
        errors: list[str] = []

        for name in (
            "DEFAULT_TOL",
            "ROOT_TOL",
            "POINT_MATCH_TOL",
            "PERIOD_TOL",
            "SOLVER_RESIDUAL_TOL",
            "QUADRATURE_TOL",
            "MESH_EXCLUSION_RADIUS",
            "MESH_PERIOD_TOL",
            "MESH_CLOSURE_TOL",
            "SOLVER_BOX",
        ):
            if getattr(self, name) <= 0:
                errors.append(f"{name} must be positive")
        if self.THREADS < 1:
            errors.append("THREADS must be at least 1")
        if self.CONTOUR_NODES < 16:
            errors.append("CONTOUR_NODES must be at least 16")
        if self.QUADRATURE_NODES < 2:
            errors.append("QUADRATURE_NODES must be at least 2")
        if self.SOLVER_STARTS < 1:
            errors.append("SOLVER_STARTS must be at least 1")
        if self.ROOT_MAX_ITER < 1 or self.SOLVER_MAX_ITER < 1:
            errors.append("iteration limits must be at least 1")
        if self.LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            errors.append(f"LOG_LEVEL {self.LOG_LEVEL!r} is not a logging level")

        if errors:
            raise ValueError("invalid configuration: " + "; ".join(errors))
        return self

    @property
    def is_production(self) -> bool:
        return self.ENVIRONMENT == "production"

    @property
    def use_json_logs(self) -> bool:
        if self.LOG_JSON is None:
            return self.is_production
        return self.LOG_JSON


settings = Settings()
