from gaussmap_lab.families.base import Expected, FamilyBase, FamilyInfo, FamilyInstance, Params
from gaussmap_lab.families.canonical import CanonicalReport
from gaussmap_lab.families.gauss import OMEGA_SHAPES
from gaussmap_lab.families.obstruction import OBSTRUCTIONS, check_obstruction, obstruction_triple
from gaussmap_lab.families.registry import (
    FAMILY_IDS,
    build,
    build_variant,
    example_params,
    expected,
    get_family,
    list_families,
    period_constraints,
    residue_formulas,
    validate,
    verify_canonical,
)
from gaussmap_lab.families.symmetry import (
    DOUBLE_COVERS,
    SYMMETRIES,
    check_double_cover,
    check_kw_recovery,
    check_symmetry,
)

__all__ = [
    "DOUBLE_COVERS",
    "FAMILY_IDS",
    "OBSTRUCTIONS",
    "OMEGA_SHAPES",
    "SYMMETRIES",
    "CanonicalReport",
    "Expected",
    "FamilyBase",
    "FamilyInfo",
    "FamilyInstance",
    "Params",
    "build",
    "build_variant",
    "check_double_cover",
    "check_kw_recovery",
    "check_obstruction",
    "check_symmetry",
    "example_params",
    "expected",
    "get_family",
    "list_families",
    "obstruction_triple",
    "period_constraints",
    "residue_formulas",
    "validate",
    "verify_canonical",
]
