from typing import Any, Mapping, Optional

import numpy as np

from gaussmap_lab.algebra.points import SpherePoint
from gaussmap_lab.core.exceptions import InputError, Unsupported
from gaussmap_lab.families.base import Expected, FamilyBase, FamilyInfo, FamilyInstance, Params, Triple
from gaussmap_lab.families.canonical import (
    CanonicalFamily,
    CanonicalReport,
    canon_g111,
    canon_g211,
    canon_g42,
    canon_gd1,
    verify_canonical as _verify_canonical,
)
from gaussmap_lab.families.gauss import variant_data
from gaussmap_lab.families.known import kw, ms
from gaussmap_lab.families.variants import p49_w5, t47_c1_w1, t47_c1_w2, t47_c1_w5, t47_c1_w8, t47_c4_w5
from gaussmap_lab.weierstrass.data import WeierstrassData

MS = "ms"
KW = "kw"
T47_C1_W1 = "t47-c1-w1"
T47_C1_W2 = "t47-c1-w2"
T47_C1_W5 = "t47-c1-w5"
T47_C1_W8 = "t47-c1-w8"
T47_C4_W5 = "t47-c4-w5"
P49_W5 = "p49-w5"
CANON_G111 = "canon-g111"
CANON_G211 = "canon-g211"
CANON_G42 = "canon-g42"
CANON_GD1 = "canon-gd1"

FAMILIES: dict[str, FamilyBase] = {
    family.id: family
    for family in (
        ms,
        kw,
        t47_c1_w1,
        t47_c1_w2,
        t47_c1_w5,
        t47_c1_w8,
        t47_c4_w5,
        p49_w5,
        canon_g111,
        canon_g211,
        canon_g42,
        canon_gd1,
    )
}

FAMILY_IDS = tuple(FAMILIES)


def get_family(id: str) -> FamilyBase:
    key = id.strip().lower().replace("_", "-")
    family = FAMILIES.get(key)
    if family is None:
        raise InputError(f"unknown family {id!r}", family=id, known=list(FAMILY_IDS))
    return family


def list_families() -> list[FamilyInfo]:
    return [
        FamilyInfo(
            id=f.id,
            title=f.title,
            params=tuple(f.param_names),
            punctures=tuple(f.punctures),
            canonical=f.canonical,
            constrained=f.constrained,
        )
        for f in FAMILIES.values()
    ]


def validate(id: str, params: Optional[Mapping[str, Any]]) -> Params:
    return get_family(id).validate(params)


def build(id: str, params: Optional[Mapping[str, Any]] = None) -> FamilyInstance:
    """Build a family instance; omitted parameters fall back to the reference instance."""
    family = get_family(id)
    return family.build(family.example if params is None else params)


def build_variant(case: str, variant: int, params: Mapping[str, Any]) -> WeierstrassData:
    return variant_data(case, variant, params)


def period_constraints(id: str, params: Optional[Mapping[str, Any]] = None) -> np.ndarray:
    family = get_family(id)
    return family.period_constraints(family.example if params is None else params)


def residue_formulas(id: str, params: Optional[Mapping[str, Any]] = None) -> dict[SpherePoint, Triple]:
    family = get_family(id)
    return family.residue_formulas(family.example if params is None else params)


def example_params(id: str) -> Params:
    return get_family(id).example_params()


def expected(id: str) -> Expected:
    return get_family(id).expected


def verify_canonical(id: str) -> CanonicalReport:
    family = get_family(id)
    if not isinstance(family, CanonicalFamily):
        raise Unsupported(f"{id} is not a canonical map", family=id)
    return _verify_canonical(family)


__all__ = [
    "CANON_G111",
    "CANON_G211",
    "CANON_G42",
    "CANON_GD1",
    "FAMILIES",
    "FAMILY_IDS",
    "KW",
    "MS",
    "P49_W5",
    "T47_C1_W1",
    "T47_C1_W2",
    "T47_C1_W5",
    "T47_C1_W8",
    "T47_C4_W5",
    "build",
    "build_variant",
    "example_params",
    "expected",
    "get_family",
    "list_families",
    "period_constraints",
    "residue_formulas",
    "validate",
    "verify_canonical",
]
