from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from gaussmap_lab.schemas.scalar import ComplexFloat, ComplexValue, ExactRational, PointValue


class FiberPointOut(BaseModel):
    point: PointValue
    multiplicity: int
    radius: float = 0.0

    model_config = ConfigDict(from_attributes=True)


class OmittedValueOut(BaseModel):
    value: PointValue
    bracket: list[int]
    fiber: list[FiberPointOut]

    model_config = ConfigDict(from_attributes=True)


class RamifiedValueOut(BaseModel):
    value: PointValue
    order: int
    branching: int
    weight: ExactRational
    fiber: list[FiberPointOut]

    model_config = ConfigDict(from_attributes=True)


class TRReportOut(BaseModel):
    degree: int
    n_punctures: int
    D: int
    R: int
    S: int
    nu: ExactRational
    total_branching: int
    omitted: list[OmittedValueOut]
    ramified: list[RamifiedValueOut]
    notes: list[str] = Field(default_factory=list)

    model_config = ConfigDict(from_attributes=True)


class BoundResultOut(BaseModel):
    name: str
    lhs: ExactRational
    rhs: ExactRational
    applicable: bool
    strict: bool
    holds: bool
    sharp: bool

    model_config = ConfigDict(from_attributes=True)


class BoundCheckOut(BaseModel):
    degree: int
    passed: bool
    results: list[BoundResultOut]

    model_config = ConfigDict(from_attributes=True)


class EndResiduesOut(BaseModel):
    point: PointValue
    label: str
    residues: list[ComplexFloat]
    max_im: float

    model_config = ConfigDict(from_attributes=True)


class PeriodReportOut(BaseModel):
    passed: bool
    tol: float
    mode: str
    max_im: float
    ends: list[EndResiduesOut]
    global_sums: Optional[list[ComplexFloat]] = None

    model_config = ConfigDict(from_attributes=True)


class MetricReportOut(BaseModel):
    regular: bool
    complete: bool
    degenerate_points: list[PointValue]
    end_orders: dict[str, int]

    model_config = ConfigDict(from_attributes=True)


class ExpectedOut(BaseModel):
    D: int
    R: int
    nu: ExactRational
    curvature: Optional[int] = None

    model_config = ConfigDict(from_attributes=True)


class CertificateOut(BaseModel):
    id: str
    passed: bool
    checks: dict[str, bool]
    failing: list[str]
    params: dict[str, ComplexValue]
    expected: ExpectedOut
    tr: TRReportOut
    bounds: BoundCheckOut
    period: Optional[PeriodReportOut] = None
    metric: Optional[MetricReportOut] = None
    curvature: Optional[int] = None

    model_config = ConfigDict(from_attributes=True)


class AllocationOut(BaseModel):
    brackets: dict[str, list[int]]
    case: Optional[str] = None

    model_config = ConfigDict(from_attributes=True)


class CanonicalReportOut(BaseModel):
    id: str
    degree: int
    omitted: list[PointValue]
    infinity_fiber: list[FiberPointOut]
    pattern: AllocationOut
    quadruple: list[PointValue]
    cross_ratio: PointValue
    clauses: list[str]

    model_config = ConfigDict(from_attributes=True)


class AnalyzeOut(BaseModel):
    passed: bool
    tr: TRReportOut
    bounds: BoundCheckOut
    allocation: Optional[AllocationOut] = None


class StartOutcomeOut(BaseModel):
    index: int
    residual_norm: float
    iterations: int
    reason: str

    model_config = ConfigDict(from_attributes=True)


class SolveResultOut(BaseModel):
    status: str
    heuristic: bool
    names: list[str]
    x: list[float]
    params: dict[str, ComplexValue]
    residual_norm: float
    start_index: int
    iterations: int
    converged_starts: int
    outcomes: list[StartOutcomeOut]
    certificate: Optional[CertificateOut] = None
    notes: list[str] = Field(default_factory=list)

    model_config = ConfigDict(from_attributes=True)


class SuiteOut(BaseModel):
    seed: int
    count: int
    passed: bool
    violations: list[tuple[int, str]]
    skipped: int
    max_surjective_nu: ExactRational
    sharp: int


class MeshSummaryOut(BaseModel):
    path: Optional[str] = None
    vertices: int
    faces: int
    cycles: int
    closure: float
    diameter: float
    closure_ok: bool
    isothermality: float
    boundary_components: int
    provenance: dict[str, Any] = Field(default_factory=dict)


class FamilyInfoOut(BaseModel):
    id: str
    title: str
    params: list[str]
    punctures: list[PointValue]
    canonical: bool
    constrained: bool

    model_config = ConfigDict(from_attributes=True)


class ErrorOut(BaseModel):
    error: str
    detail: str
    context: dict[str, Any] = Field(default_factory=dict)


class VerifyOut(BaseModel):
    passed: bool
    certificate: CertificateOut
    canonical: Optional[CanonicalReportOut] = None


class FamiliesOut(BaseModel):
    families: list[FamilyInfoOut]
