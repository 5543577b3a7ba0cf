from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussmap_lab.algebra.points import INF, is_inf
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap, normalize
from gaussmap_lab.algebra.residue import residue, residue_sum
from gaussmap_lab.algebra.roots import roots
from gaussmap_lab.algebra.scalars import I, ExactComplex
from gaussmap_lab.core.exceptions import ZeroDenominator, ZeroPolynomialError


def test_normalize_cancels_common_factor():
    R = normalize(Poly([-1, 0, 1]), Poly([-1, 1]))

    assert R.num == Poly([1, 1])
    assert R.den == Poly([1])


def test_normalize_makes_denominator_monic():
    R = normalize(Poly([1]), Poly([1, 0, 2]) ** 2)

    assert R.num == Poly([Fraction(1, 4)])
    assert R.den == Poly([Fraction(1, 2), 0, 1]) ** 2


def test_normalize_constant_gcd():
    R = normalize(Poly([0, 2]), Poly([2]))

    assert R.num == Poly([0, 1])
    assert R.den == Poly([1])


def test_zero_denominator_is_rejected():
    with pytest.raises(ZeroDenominator):
        RationalMap.of(Poly([1]), Poly([]))


def test_eval_on_the_sphere(canonical_case_one):
    case_four = RationalMap.of(Poly.monomial(2, -4), Poly([-1, 0, 1]) ** 2)

    assert canonical_case_one.eval(0) == 1
    assert canonical_case_one.eval(INF) == 0
    assert case_four.eval(I) == 1
    assert is_inf(RationalMap.identity().eval(INF))
    assert is_inf(RationalMap.of(Poly([1]), Poly([0, 1])).eval(0))


def test_roots_of_exact_square():
    clusters = roots(Poly([Fraction(1, 2), 0, 1]) ** 2)

    assert sorted(c.multiplicity for c in clusters) == [2, 2]
    for c in clusters:
        assert abs(c.center) == pytest.approx(2**-0.5)
        assert c.center.real == pytest.approx(0.0, abs=1e-12)


def test_roots_of_monomial():
    clusters = roots(Poly.monomial(4))

    assert len(clusters) == 1
    assert clusters[0].location == 0
    assert clusters[0].multiplicity == 4


def test_roots_satisfy_vieta():
    clusters = roots(Poly([23, 10 * I, 1]))
    z1, z2 = (c.center for c in clusters)

    assert z1 * z2 == pytest.approx(23)
    assert z1 + z2 == pytest.approx(-10j)


def test_roots_of_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        roots(Poly())


@pytest.mark.parametrize("mode", ["exact", "numeric"])
def test_residue_of_simple_pole(mode):
    assert complex(residue(RationalMap.of(Poly([1]), Poly([0, 1])), 0, mode=mode)) == pytest.approx(1)


@pytest.mark.parametrize("mode", ["exact", "numeric"])
def test_double_pole_without_simple_term(mode):
    value = complex(residue(RationalMap.of(Poly([1]), Poly([0, 0, 1])), 0, mode=mode))

    assert value == pytest.approx(0, abs=1e-10)


def test_exact_residue_is_exact():
    value = residue(RationalMap.of(Poly([3]), Poly([-I, 1]) * Poly([I, 1])), I, mode="exact")

    assert isinstance(value, ExactComplex)
    assert value == ExactComplex(0, Fraction(-3, 2))


gaussian = st.builds(ExactComplex, st.integers(-3, 3), st.integers(-3, 3))


@given(st.lists(gaussian, min_size=1, max_size=3, unique=True), st.lists(gaussian, min_size=1, max_size=3))
def test_residues_sum_to_zero(poles, numerator):
    R = RationalMap.of(Poly(numerator), Poly.from_roots(poles))
    if R.is_zero:
        return

    assert complex(residue_sum(R)) == pytest.approx(0, abs=1e-9)


def test_scalar_constants():
    from gaussmap_lab.algebra.scalars import ONE, ZERO

    assert ZERO + ONE == ONE
    assert I == ExactComplex(0, 1)
    assert I * I == -ONE


def test_float_quadruple_root_is_one_cluster():
    clusters = roots(Poly([1.0, -4.0, 6.0, -4.0, 1.0]))

    assert [c.multiplicity for c in clusters] == [4]
    assert clusters[0].center == pytest.approx(1.0, abs=1e-3)


def test_float_multiple_root_next_to_a_simple_one():
    center = 0.3 + 0.7j
    clusters = roots(Poly.from_roots([center] * 4 + [3.0]))
    by_multiplicity = {c.multiplicity: c.center for c in clusters}

    assert sorted(by_multiplicity) == [1, 4]
    assert by_multiplicity[4] == pytest.approx(center, abs=1e-3)
    assert by_multiplicity[1] == pytest.approx(3.0, abs=1e-8)


def test_close_simple_roots_stay_apart():
    clusters = roots(Poly.from_roots([1.0, 1.001, -2.0]))

    assert sorted(c.multiplicity for c in clusters) == [1, 1, 1]


def test_eval_at_float_pole():
    g = RationalMap.of(Poly([1]), Poly([-2, 0, 1]))

    assert is_inf(g.eval(2**0.5))
    assert not is_inf(g.eval(2**0.5 + 1e-3))
