from typing import Any, Optional


class GaussmapError(Exception):
    """Base error. `code` is stable and ends up in the CLI error object."""

    code = "error"

    def __init__(self, detail: str, **context: Any):
        super().__init__(detail)
        self.detail = detail
        self.context = context

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"error": self.code, "detail": self.detail}
        if self.context:
            payload["context"] = {key: _jsonable(value) for key, value in self.context.items()}
        return payload


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    return str(value)


class InputError(GaussmapError):
    code = "input_error"


class ConfigError(GaussmapError):
    code = "config_error"


class ZeroDenominator(GaussmapError):
    code = "zero_denominator"


class ZeroPolynomialError(GaussmapError):
    code = "zero_polynomial"


class ConvergenceFailure(GaussmapError):
    code = "convergence_failure"


class NotAPole(GaussmapError):
    code = "not_a_pole"


class ContourTooLarge(GaussmapError):
    code = "contour_too_large"


class Degenerate(GaussmapError):
    code = "degenerate"


class TolTooCoarse(GaussmapError):
    code = "tol_too_coarse"


class NotOmitted(GaussmapError):
    code = "not_omitted"

    def __init__(self, value: Any, witness: Any, detail: Optional[str] = None):
        super().__init__(
            detail or f"value {value} is attained at {witness}, which is not a puncture",
            value=value,
            witness=witness,
        )
        self.value = value
        self.witness = witness


class MetricSingular(GaussmapError):
    code = "metric_singular"


class InvalidParams(GaussmapError):
    code = "invalid_params"

    def __init__(self, predicate: str, family: Optional[str] = None):
        detail = f"parameters violate: {predicate}"
        if family:
            detail = f"{family}: {detail}"
        super().__init__(detail, predicate=predicate, family=family)
        self.predicate = predicate


class Unsupported(GaussmapError):
    code = "unsupported"


class StructuralViolation(GaussmapError):
    code = "structural_violation"

    def __init__(self, clause: str, **context: Any):
        super().__init__(f"structural check failed: {clause}", clause=clause, **context)
        self.clause = clause


class PathThroughPole(GaussmapError):
    code = "path_through_pole"


class PeriodFailure(GaussmapError):
    code = "period_failure"


class NonFiniteValue(GaussmapError):
    code = "non_finite_value"
