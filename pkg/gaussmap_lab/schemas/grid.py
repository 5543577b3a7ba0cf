from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from gaussmap_lab.core.config import settings
from gaussmap_lab.schemas.scalar import ComplexValue, dump_scalar


class GridSpec(BaseModel):
    kind: Literal["polar", "rect"] = "polar"
    # polar: log-spaced radii around center, `angular` nodes per circle
    center: ComplexValue = 0
    r_min: float = Field(0.2, gt=0)
    r_max: float = Field(5.0, gt=0)
    radial: int = Field(32, ge=2)
    angular: int = Field(64, ge=3)
    # rect: (x_min, x_max, y_min, y_max)
    window: Optional[tuple[float, float, float, float]] = None
    nx: int = Field(81, ge=2)
    ny: int = Field(81, ge=2)
    exclusion: float = Field(default_factory=lambda: settings.MESH_EXCLUSION_RADIUS, gt=0)
    basepoint: Optional[ComplexValue] = None

    @model_validator(mode="after")
    def check_shape(self) -> "GridSpec":
        if self.kind == "polar" and self.r_max <= self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.kind == "rect":
            if self.window is None:
                raise ValueError("rect grids need a window")
            x0, x1, y0, y1 = self.window
            if x1 <= x0 or y1 <= y0:
                raise ValueError("window must be (x_min, x_max, y_min, y_max) with positive extent")
        return self

    def fingerprint(self) -> dict[str, Any]:
        payload = self.model_dump(mode="json")
        payload["center"] = dump_scalar(self.center)
        return payload
