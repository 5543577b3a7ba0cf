"""End-to-end verification of a family instance: periods, metric, totally ramified values, bounds."""
import logging
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from gaussmap_lab.algebra.residue import Mode
from gaussmap_lab.families.base import Expected, Params
from gaussmap_lab.families.registry import get_family
from gaussmap_lab.sphere.bounds import BoundCheck, check_bounds
from gaussmap_lab.sphere.report import TotallyRamifiedReport, tr_report
from gaussmap_lab.weierstrass.metric import MetricReport, regularity_and_completeness, total_curvature
from gaussmap_lab.weierstrass.period import PeriodReport, period_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    id: str
    params: Params
    expected: Expected
    tr: TotallyRamifiedReport
    bounds: BoundCheck
    period: Optional[PeriodReport] = None
    metric: Optional[MetricReport] = None
    curvature: Optional[int] = None

    @property
    def checks(self) -> dict[str, bool]:
        out = {
            "D": self.tr.D == self.expected.D,
            "R": self.tr.R == self.expected.R,
            "nu": self.tr.nu == self.expected.nu,
            "bounds": self.bounds.passed,
        }
        if self.period is not None:
            out["periods"] = self.period.passed
        if self.metric is not None:
            out["regular"] = self.metric.regular
            out["complete"] = self.metric.complete
        if self.expected.curvature is not None:
            out["curvature"] = self.curvature == self.expected.curvature
        return out

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failing(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def verify_solution(
    id: str,
    params: Optional[Mapping[str, Any]] = None,
    tol: Optional[float] = None,
    mode: Mode = "auto",
    nodes: Optional[int] = None,
) -> Certificate:
    """Build the instance and record every sub-verdict; the reference instance is used when params is None."""
    family = get_family(id)
    instance = family.build(family.example if params is None else params)
    report = tr_report(instance.g, instance.dom)

    if instance.data is None:
        certificate = Certificate(
            id=family.id,
            params=instance.params,
            expected=instance.expected,
            tr=report,
            bounds=check_bounds(report),
        )
    else:
        certificate = Certificate(
            id=family.id,
            params=instance.params,
            expected=instance.expected,
            tr=report,
            bounds=check_bounds(report, minimal_surface=True),
            period=period_report(instance.data, mode=mode, tol=tol, nodes=nodes),
            metric=regularity_and_completeness(instance.data),
            curvature=total_curvature(instance.data),
        )

    logger.info(
        "solution verified",
        extra={"family": family.id, "passed": certificate.passed, "failing": certificate.failing},
    )
    return certificate


__all__ = ["Certificate", "verify_solution"]
