import pytest

from gaussmap_lab.core.exceptions import InputError
from gaussmap_lab.families import OBSTRUCTIONS, check_obstruction, obstruction_triple

PARAMS = {"sigma": 1 + 2j, "tau": 0.4 - 0.3j, "b": -1.5 + 0.5j, "b1": -1 + 1j, "b2": 2 + 3j, "theta": 0.7 + 0.2j}


def test_triple_at_tau_one():
    verdict = obstruction_triple(1j, 1)

    assert verdict.triple == pytest.approx((0, 2j, 1j))
    assert verdict.conditions == (True, False, True)
    assert verdict.infeasible


def test_tau_zero_forces_u_zero():
    verdict = obstruction_triple(0.3 + 0.8j, 0)

    assert verdict.rank == 2
    assert verdict.infeasible


def test_tau_squared_minus_one_branch():
    verdict = obstruction_triple(2 - 1j, 1j)

    assert verdict.branch == "tau_squared_is_minus_one"
    assert verdict.infeasible


@pytest.mark.parametrize("tau", [0.5, 2 - 1j, -0.2 + 3j, 0.6 + 0.8j])
def test_every_tau_is_infeasible(tau):
    assert obstruction_triple(1 + 1j, tau).infeasible


@pytest.mark.parametrize("name", sorted(OBSTRUCTIONS))
def test_printed_combinations_match_residues(name):
    params = {key: value for key, value in PARAMS.items()}
    check = check_obstruction(name, params)

    assert check.relative_error < 1e-8
    assert check.verdict.infeasible


def test_unknown_obstruction():
    with pytest.raises(InputError):
        check_obstruction("c9-w1", PARAMS)
