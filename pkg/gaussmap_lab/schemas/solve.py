import re
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from gaussmap_lab.core.config import settings
from gaussmap_lab.schemas.scalar import ComplexValue

_FREE = re.compile(r"^(?:(re|im):)?([A-Za-z_]\w*)$")


def split_free(entry: str) -> tuple[Optional[str], str]:
    """Split re:sigma into ("re", "sigma"); a bare name frees both parts."""
    match = _FREE.match(entry.strip())
    if match is None:
        raise ValueError(f"free entry {entry!r} is not [re:|im:]name")
    return match.group(1), match.group(2)


class SolveSpec(BaseModel):
    family: str = Field(..., min_length=1)
    fix: dict[str, ComplexValue] = Field(default_factory=dict)
    tie: dict[str, str] = Field(default_factory=dict)
    free: list[str] = Field(..., min_length=1)
    unit: list[str] = Field(default_factory=list)
    start: dict[str, ComplexValue] = Field(default_factory=dict)
    tol: float = Field(default_factory=lambda: settings.SOLVER_RESIDUAL_TOL, gt=0)
    starts: int = Field(default_factory=lambda: settings.SOLVER_STARTS, ge=1)
    seed: int = Field(default_factory=lambda: settings.SOLVER_SEED)
    max_iter: int = Field(default_factory=lambda: settings.SOLVER_MAX_ITER, ge=1)
    box: float = Field(default_factory=lambda: settings.SOLVER_BOX, gt=0)

    @field_validator("free")
    @classmethod
    def check_free(cls, value: list[str]) -> list[str]:
        for entry in value:
            split_free(entry)
        return value

    @model_validator(mode="after")
    def check_roles(self) -> "SolveSpec":
        free = {split_free(entry)[1] for entry in self.free}
        errors = []
        for name in self.tie:
            if name in free:
                errors.append(f"{name} is both free and tied")
            if name in self.fix:
                errors.append(f"{name} is both fixed and tied")
        for name in self.unit:
            if name not in free:
                errors.append(f"unit constraint on {name} needs {name} to be free")
        if errors:
            raise ValueError("; ".join(errors))
        return self

    def free_parts(self) -> list[tuple[str, str]]:
        """(name, part) for every real variable, in declaration order."""
        parts: list[tuple[str, str]] = []
        for entry in self.free:
            part, name = split_free(entry)
            for p in ("re", "im") if part is None else (part,):
                if (name, p) not in parts:
                    parts.append((name, p))
        return parts

    def initial(self) -> dict[str, Any]:
        return {**self.fix, **self.start}
