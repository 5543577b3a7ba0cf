from gaussmap_lab.sphere.allocation import AllocationPattern, classify_allocation
from gaussmap_lab.sphere.bounds import BoundCheck, BoundResult, check_bounds
from gaussmap_lab.sphere.domain import PuncturedSphere, sphere_minus
from gaussmap_lab.sphere.moebius import MoebiusMap, canonical_phi, cross_ratio, mobius_apply
from gaussmap_lab.sphere.ramification import (
    FiberPoint,
    RamificationProfile,
    fiber,
    multiplicity_at,
    ramification_profile,
)
from gaussmap_lab.sphere.report import TotallyRamifiedReport, tr_report
from gaussmap_lab.sphere.suite import bound_suite

__all__ = [
    "AllocationPattern",
    "BoundCheck",
    "BoundResult",
    "FiberPoint",
    "MoebiusMap",
    "PuncturedSphere",
    "RamificationProfile",
    "TotallyRamifiedReport",
    "bound_suite",
    "canonical_phi",
    "check_bounds",
    "classify_allocation",
    "cross_ratio",
    "fiber",
    "mobius_apply",
    "multiplicity_at",
    "ramification_profile",
    "sphere_minus",
    "tr_report",
]
