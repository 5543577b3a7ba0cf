import cmath
from fractions import Fraction

import pytest

from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.utils.expressions import compile_tie, parse_constant
from gaussmap_lab.utils.hashing import provenance_hash


def test_rational_expressions_stay_exact():
    assert parse_constant("-3/13") == ExactComplex(Fraction(-3, 13))
    assert parse_constant("(4 + 3*i)/13") == ExactComplex(Fraction(4, 13), Fraction(3, 13))


def test_transcendental_expressions_are_numeric():
    assert parse_constant("exp(i*pi/6)") == pytest.approx(cmath.exp(1j * cmath.pi / 6))
    assert parse_constant("sqrt(13/2)") == pytest.approx((13 / 2) ** 0.5)


def test_expressions_may_use_earlier_parameters():
    sigma = parse_constant("i*sqrt(3/5)")

    assert parse_constant("-sigma/7", {"sigma": sigma}) == pytest.approx(-sigma / 7)


@pytest.mark.parametrize("text", ["__import__('os')", "sigma + 1", "2 +", "[1, 2]"])
def test_bad_expressions(text):
    with pytest.raises(InputError):
        parse_constant(text)


def test_compiled_tie():
    tie = compile_tie("-conjugate(b1)", ["b1", "sigma"])

    assert tie.names == ("b1",)
    assert tie({"b1": 0.3 + 0.4j, "sigma": 1j}) == pytest.approx(-0.3 + 0.4j)


def test_provenance_hash_is_stable():
    first = provenance_hash({"b": [1, 2], "a": "x"})

    assert first == provenance_hash({"a": "x", "b": [1, 2]})
    assert len(first) == 12
    assert first != provenance_hash({"a": "y", "b": [1, 2]})
