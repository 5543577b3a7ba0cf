from gaussmap_lab.weierstrass.data import AlphaForm, OneForm, WeierstrassData, alpha
from gaussmap_lab.weierstrass.metric import (
    MetricReport,
    pointwise_geometry,
    regularity_and_completeness,
    total_curvature,
)
from gaussmap_lab.weierstrass.period import PeriodReport, period_report

__all__ = [
    "AlphaForm",
    "MetricReport",
    "OneForm",
    "PeriodReport",
    "WeierstrassData",
    "alpha",
    "period_report",
    "pointwise_geometry",
    "regularity_and_completeness",
    "total_curvature",
]
