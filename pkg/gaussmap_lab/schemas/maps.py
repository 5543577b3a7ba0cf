from typing import Any

from pydantic import BaseModel, Field, RootModel, field_validator

from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.schemas.scalar import ComplexValue, PointValue
from gaussmap_lab.sphere.domain import PuncturedSphere
from gaussmap_lab.weierstrass.data import WeierstrassData


class RationalMapIn(BaseModel):
    """Coefficient lists, lowest degree first."""

    num: list[ComplexValue] = Field(..., min_length=1)
    den: list[ComplexValue] = Field(default_factory=lambda: [1], min_length=1)

    @field_validator("den")
    @classmethod
    def den_not_zero(cls, value: list[Any]) -> list[Any]:
        if Poly(value).is_zero:
            raise ValueError("the denominator is the zero polynomial")
        return value

    def to_map(self) -> RationalMap:
        return RationalMap.of(Poly(self.num), Poly(self.den))


class PuncturesIn(RootModel[list[PointValue]]):
    def to_domain(self) -> PuncturedSphere:
        return PuncturedSphere.of(self.root)


class WeierstrassDataIn(BaseModel):
    g: RationalMapIn
    omega: RationalMapIn
    punctures: list[PointValue] = Field(default_factory=list)

    def to_data(self) -> WeierstrassData:
        return WeierstrassData.of(self.g.to_map(), self.omega.to_map(), self.punctures)


class ParamsIn(RootModel[dict[str, ComplexValue]]):
    def to_dict(self) -> dict[str, Any]:
        return dict(self.root)
