from fractions import Fraction
from typing import Annotated, Any, Union

from pydantic import BeforeValidator, PlainSerializer

from gaussmap_lab.algebra.points import INF, SpherePoint, is_inf
from gaussmap_lab.algebra.scalars import ExactComplex, Scalar, approx, as_scalar
from gaussmap_lab.core.exceptions import GaussmapError
from gaussmap_lab.utils.expressions import parse_constant

_INFINITY_WORDS = {"inf", "infinity", "∞"}


def _part(value: Any) -> Union[Fraction, float]:
    if isinstance(value, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            return float(value)
    raise ValueError(f"cannot read {value!r} as a real number")


def parse_scalar(value: Any) -> Scalar:
    """[re, im] pairs, bare numbers or expression strings."""
    if isinstance(value, (ExactComplex, complex)):
        return as_scalar(value)
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError("complex values are [re, im] pairs")
        re, im = (_part(v) for v in value)
        if isinstance(re, Fraction) and isinstance(im, Fraction):
            return ExactComplex(re, im)
        return approx(complex(float(re), float(im)))
    if isinstance(value, str):
        try:
            return parse_constant(value)
        except GaussmapError as exc:
            raise ValueError(exc.detail) from exc
    if isinstance(value, (int, float, Fraction)) and not isinstance(value, bool):
        return as_scalar(value)
    raise ValueError(f"cannot read {value!r} as a complex value")


def parse_point(value: Any) -> SpherePoint:
    if is_inf(value) or (isinstance(value, str) and value.strip().lower() in _INFINITY_WORDS):
        return INF
    return parse_scalar(value)


def dump_scalar(value: Any) -> Any:
    """Exact values as [re, im] strings, floats as [re, im] numbers, ∞ as "inf"."""
    if is_inf(value):
        return "inf"
    if isinstance(value, ExactComplex):
        return value.to_pair()
    z = complex(value)
    return [z.real, z.imag]


def dump_rational(value: Any) -> str:
    return str(Fraction(value))


ComplexValue = Annotated[Any, BeforeValidator(parse_scalar), PlainSerializer(dump_scalar, return_type=Any)]
PointValue = Annotated[Any, BeforeValidator(parse_point), PlainSerializer(dump_scalar, return_type=Any)]
ComplexFloat = Annotated[
    Any,
    BeforeValidator(complex),
    PlainSerializer(lambda z: [complex(z).real, complex(z).imag], return_type=list[float]),
]
ExactRational = Annotated[Any, BeforeValidator(Fraction), PlainSerializer(dump_rational, return_type=str)]
