"""Period condition on a punctured sphere: every residue of α at an end must be real."""
import logging
from dataclasses import dataclass, field
from typing import Optional

from gaussmap_lab.algebra.points import SpherePoint, point_label
from gaussmap_lab.algebra.residue import Mode, residue, residue_sum
from gaussmap_lab.core.config import settings
from gaussmap_lab.tasks.worker import parallel_map
from gaussmap_lab.weierstrass.data import AlphaForm, WeierstrassData, alpha

logger = logging.getLogger(__name__)

Triple = tuple[complex, complex, complex]


@dataclass(frozen=True)
class EndResidues:
    point: SpherePoint
    residues: Triple

    @property
    def label(self) -> str:
        return point_label(self.point)

    @property
    def max_im(self) -> float:
        return max(abs(r.imag) for r in self.residues)


@dataclass(frozen=True)
class PeriodReport:
    ends: tuple[EndResidues, ...]
    tol: float
    mode: str
    global_sums: Optional[Triple] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def max_im(self) -> float:
        return max((e.max_im for e in self.ends), default=0.0)

    @property
    def scale(self) -> float:
        return max((abs(r) for e in self.ends for r in e.residues), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_im <= self.tol * (1.0 + self.scale)

    def at(self, label: str) -> Triple:
        for e in self.ends:
            if e.label == label:
                return e.residues
        raise KeyError(label)

    def failing(self) -> list[EndResidues]:
        bound = self.tol * (1.0 + self.scale)
        return [e for e in self.ends if e.max_im > bound]


def _triple(A: AlphaForm, p: SpherePoint, mode: Mode, nodes: Optional[int]) -> Triple:
    return tuple(complex(residue(a, p, mode=mode, nodes=nodes, strict=False)) for a in A.components)  # type: ignore[return-value]


def period_report(
    data: WeierstrassData,
    mode: Mode = "auto",
    tol: Optional[float] = None,
    nodes: Optional[int] = None,
    check_global: bool = False,
) -> PeriodReport:
    """Residues of (α₁, α₂, α₃) at every puncture and the realness verdict."""
    tol = settings.PERIOD_TOL if tol is None else tol
    A = alpha(data)
    ends = parallel_map(
        lambda p: EndResidues(p, _triple(A, p, mode, nodes)),
        data.dom.punctures,
    )
    sums: Optional[Triple] = None
    if check_global:
        sums = tuple(complex(residue_sum(a)) for a in A.components)  # type: ignore[assignment]
    report = PeriodReport(ends=tuple(ends), tol=tol, mode=mode, global_sums=sums)
    logger.debug(
        "period report",
        extra={"ends": len(report.ends), "max_im": report.max_im, "passed": report.passed},
    )
    return report


__all__ = ["EndResidues", "PeriodReport", "period_report"]
