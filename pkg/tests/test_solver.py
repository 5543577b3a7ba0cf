import cmath

import numpy as np
import pytest

from gaussmap_lab.core.exceptions import ConfigError, InputError, Unsupported
from gaussmap_lab.families import example_params
from gaussmap_lab.schemas import SolveSpec
from gaussmap_lab.solver import (
    INFEASIBLE,
    SOLVED,
    ConstraintSystem,
    LevenbergMarquardt,
    SolveConfig,
    case_two_system,
    jacobian,
    scan,
    solve,
    solve_spec,
)


def _unit_circle_spec(**extra) -> SolveSpec:
    payload = {
        "family": "t47-c1-w1",
        "fix": {"tau": 0, "theta": 1},
        "tie": {"b": "-3/13*sigma"},
        "free": ["sigma"],
        "unit": ["sigma"],
        "starts": 8,
        "seed": 0,
    }
    payload.update(extra)
    return SolveSpec.model_validate(payload)


def test_case_one_double_lands_on_imaginary_cubes():
    result = solve_spec(_unit_circle_spec())
    sigma = result.params["sigma"]

    assert result.status == SOLVED
    assert not result.heuristic
    assert abs(abs(sigma) - 1) < 1e-8
    assert abs((sigma**3).real) < 1e-7
    assert result.params["b"] == pytest.approx(-3 * sigma / 13)
    assert result.certificate is not None and result.certificate.passed


def test_solution_angle_is_a_sixth_turn_modulo_thirds():
    sigma = solve_spec(_unit_circle_spec()).params["sigma"]
    angle = cmath.phase(sigma) % (2 * np.pi / 3)

    assert min(abs(angle - np.pi / 6), abs(angle - np.pi / 2)) < 1e-6


def test_single_omitted_reference_is_recovered():
    reference = {k: complex(v) for k, v in example_params("p49-w5").items()}
    start = reference["b1"] * 1.05
    spec = SolveSpec.model_validate(
        {
            "family": "p49-w5",
            "fix": {"sigma": "i", "theta": 1},
            "tie": {"b2": "-conjugate(b1)"},
            "free": ["b1"],
            "start": {"b1": [start.real, start.imag]},
            "starts": 1,
            "tol": 1e-12,
        }
    )
    result = solve_spec(spec)

    assert result.status == SOLVED
    assert abs(result.params["b1"] - reference["b1"]) < 1e-8
    assert abs(result.params["b2"] - reference["b2"]) < 1e-8
    assert result.params["sigma"] == 1j


def test_case_two_has_no_solution_away_from_zero():
    result = solve(case_two_system(0.1), SolveConfig(starts=100, seed=0))

    assert result.status == INFEASIBLE
    assert result.heuristic
    assert result.converged_starts == 0
    assert any("heuristic verdict" in note for note in result.notes)
    U = result.params["U"]
    assert abs(U) >= 0.1 - 1e-12


def test_results_do_not_depend_on_thread_count():
    single = solve(ConstraintSystem.from_spec(_unit_circle_spec()), SolveConfig(starts=8, seed=4, threads=1))
    pooled = solve(ConstraintSystem.from_spec(_unit_circle_spec()), SolveConfig(starts=8, seed=4, threads=4))

    assert single.x == pooled.x
    assert single.start_index == pooled.start_index
    assert [o.residual_norm for o in single.outcomes] == [o.residual_norm for o in pooled.outcomes]


def test_custom_system_is_solved_on_residual_alone():
    system = ConstraintSystem.custom(lambda x: np.array([x[0] ** 2 - 2.0]), ["x"], center=[1.0])
    result = solve(system, SolveConfig(starts=1))

    assert result.status == SOLVED
    assert result.x[0] == pytest.approx(2**0.5, rel=1e-9)
    assert result.certificate is None


def test_jacobian_matches_analytic_derivative():
    system = ConstraintSystem.custom(lambda x: np.array([x[0] ** 2 + x[1], np.sin(x[1])]), ["a", "b"])
    x = np.array([0.7, -0.4])
    expected = np.array([[1.4, 1.0], [0.0, np.cos(-0.4)]])

    np.testing.assert_allclose(jacobian(system, x), expected, atol=1e-7)
    np.testing.assert_allclose(jacobian(system, x, stencil=5), expected, atol=1e-8)


def test_jacobian_is_one_sided_at_the_barrier():
    system = ConstraintSystem.custom(lambda x: np.array([3.0 * x[0]]), ["x"], valid=lambda x: x[0] >= 1.0)

    np.testing.assert_allclose(jacobian(system, np.array([1.0])), [[3.0]], rtol=1e-6)


def test_barrier_rejects_points():
    system = case_two_system(0.5)

    assert system.evaluate(np.array([0.0, 0.0, 0.1, 0.1])) is None
    assert system.evaluate(np.array([0.0, 0.0, 1.0, 0.0])) is not None


def test_center_is_the_first_start():
    system = ConstraintSystem.custom(lambda x: x - 0.5, ["a", "b"], center=[0.25, -0.75])
    points = LevenbergMarquardt(SolveConfig(starts=3, seed=2)).initial_points(system)

    assert len(points) == 3
    np.testing.assert_array_equal(points[0], [0.25, -0.75])


def test_scan_ranks_samples():
    system = ConstraintSystem.custom(lambda x: x, ["a", "b"])
    best = scan(system, samples=64, seed=5, keep=4)

    assert len(best) == 4
    norms = [s.residual_norm for s in best]
    assert norms == sorted(norms)
    assert best == scan(system, samples=64, seed=5, keep=4)


def test_spec_errors():
    with pytest.raises(Unsupported):
        ConstraintSystem.from_spec(SolveSpec(family="ms", free=["sigma"]))
    with pytest.raises(InputError):
        ConstraintSystem.from_spec(SolveSpec(family="t47-c1-w1", free=["rho"]))
    with pytest.raises(ConfigError):
        ConstraintSystem.from_spec(SolveSpec(family="t47-c1-w1", free=["sigma"], fix={"tau": 0}))
    with pytest.raises(ConfigError):
        ConstraintSystem.from_spec(
            SolveSpec(family="t47-c1-w1", free=["sigma"], tie={"b": "2*tau", "tau": "sigma"})
        )


def test_config_validation():
    with pytest.raises(ConfigError):
        SolveConfig(starts=0)
    with pytest.raises(ConfigError):
        SolveConfig(residual_tol=-1.0)
    with pytest.raises(ConfigError):
        ConstraintSystem.custom(lambda x: x, [])
