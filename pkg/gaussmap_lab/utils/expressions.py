import tokenize
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Optional

import sympy as sp
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from gaussmap_lab.algebra.scalars import ExactComplex, Scalar, approx
from gaussmap_lab.core.exceptions import InputError

# parse_expr emits calls to these when it rewrites number and name tokens
_GLOBALS: dict[str, Any] = {
    "__builtins__": {},
    "Integer": sp.Integer,
    "Float": sp.Float,
    "Rational": sp.Rational,
    "Symbol": sp.Symbol,
}

_CONSTANTS: dict[str, Any] = {
    "i": sp.I,
    "I": sp.I,
    "pi": sp.pi,
    "sqrt": sp.sqrt,
    "exp": sp.exp,
    "conjugate": sp.conjugate,
    "re": sp.re,
    "im": sp.im,
    "abs": sp.Abs,
}


def _parse(text: str, names: Iterable[str]) -> tuple[sp.Expr, dict[str, sp.Symbol]]:
    symbols = {name: sp.Symbol(name) for name in names}
    local = dict(_CONSTANTS)
    local.update(symbols)
    try:
        expr = parse_expr(text, local_dict=local, global_dict=dict(_GLOBALS), transformations=standard_transformations)
    except (SyntaxError, TypeError, ValueError, NameError, tokenize.TokenError) as exc:
        raise InputError(f"cannot parse expression {text!r}", expression=text) from exc
    if not isinstance(expr, sp.Expr):
        raise InputError(f"{text!r} is not an arithmetic expression", expression=text)
    unknown = {str(s) for s in expr.free_symbols} - set(symbols)
    if unknown:
        raise InputError(f"unknown names in {text!r}: {sorted(unknown)}", expression=text)
    return expr, symbols


def parse_constant(text: str, names: Optional[Mapping[str, Any]] = None) -> Scalar:
    """
    把常量表达式解析成标量

    Args:
        text: 如 "exp(i*pi/6)"、"-3/13"、"sqrt(13/2)"
        names: 可选的已知参数取值

    Returns:
        实部、虚部均为有理数时返回 ExactComplex，否则返回 complex
    """
    names = dict(names or {})
    expr, symbols = _parse(text, names)
    if names:
        expr = expr.subs({symbols[k]: _to_sympy(v) for k, v in names.items()})
    re, im = sp.expand_complex(expr).as_real_imag()
    if re.is_Rational and im.is_Rational:
        return ExactComplex(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    try:
        return approx(complex(sp.N(expr, 30)))
    except TypeError as exc:
        raise InputError(f"{text!r} does not evaluate to a number", expression=text) from exc


def _to_sympy(value: Any) -> sp.Expr:
    if isinstance(value, ExactComplex):
        return sp.Rational(value.re.numerator, value.re.denominator) + sp.I * sp.Rational(
            value.im.numerator, value.im.denominator
        )
    z = complex(value)
    return sp.Float(z.real, 30) + sp.I * sp.Float(z.imag, 30)


@dataclass(frozen=True)
class CompiledTie:
    """A parameter expressed through others, e.g. b = -3/13*sigma."""

    text: str
    names: tuple[str, ...]
    fn: Callable[..., Any]

    def __call__(self, values: Mapping[str, Any]) -> complex:
        return complex(self.fn(*(complex(values[name]) for name in self.names)))


def compile_tie(text: str, names: Iterable[str]) -> CompiledTie:
    expr, symbols = _parse(text, names)
    used = tuple(sorted(str(s) for s in expr.free_symbols))
    fn = sp.lambdify([symbols[name] for name in used], expr, modules="numpy")
    return CompiledTie(text=text, names=used, fn=fn)


__all__ = ["CompiledTie", "compile_tie", "parse_constant"]
