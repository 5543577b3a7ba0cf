from .grid import GridSpec
from .maps import ParamsIn, PuncturesIn, RationalMapIn, WeierstrassDataIn
from .reports import (
    AllocationOut,
    AnalyzeOut,
    BoundCheckOut,
    CanonicalReportOut,
    CertificateOut,
    ErrorOut,
    FamiliesOut,
    FamilyInfoOut,
    MeshSummaryOut,
    MetricReportOut,
    PeriodReportOut,
    SolveResultOut,
    SuiteOut,
    TRReportOut,
    VerifyOut,
)
from .scalar import ComplexValue, PointValue, dump_scalar, parse_point, parse_scalar
from .solve import SolveSpec

__all__ = [
    "ComplexValue",
    "PointValue",
    "dump_scalar",
    "parse_point",
    "parse_scalar",
    "RationalMapIn",
    "PuncturesIn",
    "WeierstrassDataIn",
    "ParamsIn",
    "SolveSpec",
    "GridSpec",
    "AllocationOut",
    "AnalyzeOut",
    "BoundCheckOut",
    "CanonicalReportOut",
    "CertificateOut",
    "ErrorOut",
    "FamiliesOut",
    "FamilyInfoOut",
    "MeshSummaryOut",
    "MetricReportOut",
    "PeriodReportOut",
    "SolveResultOut",
    "SuiteOut",
    "TRReportOut",
    "VerifyOut",
]
