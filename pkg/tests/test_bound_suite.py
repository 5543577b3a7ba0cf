from fractions import Fraction

from gaussmap_lab.sphere.suite import KINDS, bound_suite, generate_cases


def test_suite_is_reproducible_for_a_seed():
    first = generate_cases(20, seed=7)
    second = generate_cases(20, seed=7)

    assert [(c.kind, c.g, c.dom) for c in first] == [(c.kind, c.g, c.dom) for c in second]
    assert {c.kind for c in first} <= set(KINDS)


def test_no_bound_is_violated():
    result = bound_suite(count=200, seed=1, max_degree=6, max_punctures=4, threads=2)
    degrees = {o.case.g.degree for o in result.outcomes}
    sizes = {len(o.case.dom.punctures) for o in result.outcomes}

    assert result.count == 200
    assert degrees <= set(range(2, 7))
    assert max(sizes) <= 4
    assert result.violations == []
    assert result.passed
    assert result.max_surjective_nu <= Fraction(2)


def test_suite_records_sharp_cases():
    result = bound_suite(count=40, seed=3, threads=1)

    assert result.sharp
    assert all(name for _, name in result.sharp)
