import pytest

from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.families import DOUBLE_COVERS, SYMMETRIES, build, check_double_cover, check_kw_recovery, check_symmetry

PARAMS = {"sigma": 1 + 2j, "tau": 0.4 - 0.3j, "b": -1.5 + 0.5j, "b1": -1 + 1j, "b2": 2 + 3j, "theta": 1}


@pytest.mark.parametrize("name", sorted(SYMMETRIES))
def test_variant_pairs_are_related_by_a_moebius_map(name):
    check = check_symmetry(name, PARAMS)

    assert check.passed, (check.gauss_error, check.omega_spread)
    assert abs(check.factor) > 0


def test_unknown_symmetry():
    with pytest.raises(InputError):
        check_symmetry("c1-w1-w2", PARAMS)


@pytest.mark.parametrize("id", sorted(DOUBLE_COVERS))
def test_double_covers(id):
    check = check_double_cover(id, build(id).data)

    assert check.passed, (check.gauss_error, check.alpha_error, check.quotient_error)


def test_double_cover_needs_a_registered_family():
    with pytest.raises(InputError):
        check_double_cover("t47-c1-w1", build("t47-c1-w1").data)


def test_four_ended_map_is_case_one_in_the_inverted_chart():
    assert check_kw_recovery({"a": 0, "b": 2, "sigma": "i*sqrt(3/5)"}) < 1e-10
    assert check_kw_recovery({"a": -1, "b": 0, "sigma": "i*sqrt(21/11)"}) < 1e-10
