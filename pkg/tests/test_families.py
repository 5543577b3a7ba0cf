from fractions import Fraction

import numpy as np
import pytest

from gaussmap_lab.algebra.points import INF, same_point
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.core.exceptions import InputError, InvalidParams, Unsupported
from gaussmap_lab.families import (
    Expected,
    FAMILY_IDS,
    build,
    build_variant,
    example_params,
    expected,
    get_family,
    list_families,
    period_constraints,
    residue_formulas,
    validate,
)
from gaussmap_lab.weierstrass.period import period_report

VARIANTS = ("t47-c1-w1", "t47-c1-w2", "t47-c1-w5", "t47-c1-w8", "t47-c4-w5", "p49-w5")

GENERIC = {
    "t47-c1-w1": {"sigma": ExactComplex(1, 2), "tau": ExactComplex(-1, 1), "b": ExactComplex(2, -1)},
    "t47-c1-w2": {"sigma": ExactComplex(1, 2), "tau": ExactComplex(-1, 1), "b": ExactComplex(2, -1)},
    "t47-c1-w5": {"sigma": ExactComplex(2, 1), "tau": ExactComplex(1, -1), "b": ExactComplex(-1, 3)},
    "t47-c1-w8": {"sigma": ExactComplex(2, 1), "tau": ExactComplex(1, -1), "b": ExactComplex(-1, 3)},
    "t47-c4-w5": {"sigma": ExactComplex(1, 1), "tau": ExactComplex(2, -1), "b": ExactComplex(-1, 2)},
    "p49-w5": {"sigma": ExactComplex(1, 2), "b1": ExactComplex(-1, 1), "b2": ExactComplex(2, 3)},
}


def test_registry_lists_every_family():
    infos = {info.id: info for info in list_families()}

    assert set(infos) == set(FAMILY_IDS)
    assert len(FAMILY_IDS) == 12
    assert infos["canon-g111"].canonical
    assert infos["p49-w5"].constrained
    assert infos["ms"].params == ("a", "t", "sigma")


def test_family_ids_are_normalized():
    assert get_family(" T47_C1_W1 ").id == "t47-c1-w1"


def test_unknown_family():
    with pytest.raises(InputError):
        get_family("enneper")


def test_expected_invariants():
    assert expected("ms") == Expected(D=2, R=1, nu=Fraction(5, 2), curvature=-8)
    for id in ("kw",) + VARIANTS[:-1]:
        e = expected(id)
        assert (e.D, e.R, e.nu, e.curvature) == (2, 1, Fraction(5, 2), -16)
    e = expected("p49-w5")
    assert (e.D, e.R, e.nu, e.curvature) == (1, 2, Fraction(5, 2), -16)


def test_build_ms():
    instance = build("ms", {"a": -1, "t": 0, "sigma": "i*sqrt(3/5)"})

    assert instance.g.degree == 2
    assert len(instance.dom.punctures) == 3
    assert any(p is INF for p in instance.dom.punctures)


def test_build_case_one_double():
    instance = build("t47-c1-w1")
    p = {k: complex(v) for k, v in instance.params.items()}
    s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
    z = np.array([0.3 + 0.4j, -1.2 + 0.1j, 2.0 - 0.7j])

    assert instance.g.degree == 4
    assert b == pytest.approx(-3 * s / 13)
    # ω = θ((b−τ)(2z²+1)² + (τ−σ))² / (z²(z−i)²(z+i)²) dz
    omega = th * ((b - t) * (2 * z**2 + 1) ** 2 + (t - s)) ** 2 / (z**2 * (z - 1j) ** 2 * (z + 1j) ** 2)
    np.testing.assert_allclose(instance.data.h.evaluate(z), omega, rtol=1e-10)
    q = (2 * z**2 + 1) ** 2
    g = (s * (b - t) * q + b * (t - s)) / ((b - t) * q + (t - s))
    np.testing.assert_allclose(instance.g.evaluate(z), g, rtol=1e-10)


def test_build_canonical_case_one():
    instance = build("canon-g111")

    assert instance.g == RationalMap.of(Poly([1]), Poly([1, 0, 2]) ** 2)
    assert instance.data is None
    assert len(instance.dom.punctures) == 4


def test_theta_defaults_to_one():
    params = validate("t47-c1-w5", {"sigma": "sqrt(13/2)", "tau": 0, "b": "-sigma/7"})

    assert params["theta"] == 1


def test_invalid_params_name_the_predicate():
    with pytest.raises(InvalidParams) as exc_info:
        build("t47-c1-w1", {"sigma": 1, "tau": 1, "b": 2})
    assert "distinct" in exc_info.value.detail

    with pytest.raises(InputError):
        build("ms", {"a": -1, "t": 0, "sigma": 1, "rho": 2})


def test_example_params_parse_expressions():
    params = example_params("p49-w5")

    assert complex(params["sigma"]) == 1j
    assert complex(params["b1"]) == pytest.approx(complex(-4 * 10**0.5 / 13, 3 / 13))
    assert complex(params["b2"]) == pytest.approx(-complex(params["b1"]).conjugate())


def test_case_one_double_constraints_at_reference_line():
    values = period_constraints("t47-c1-w1")

    np.testing.assert_allclose(values, 0.0, atol=1e-12)


def test_case_one_double_constraints_off_the_solution():
    values = period_constraints("t47-c1-w1", {"sigma": 1, "tau": 0, "b": "-3/13"})

    # σ³ = 1 is real, so only the third constraint survives
    np.testing.assert_allclose(values[:2], 0.0, atol=1e-12)
    assert abs(values[2]) > 1e-3


def test_single_omitted_constraints_vanish_at_reference_line():
    assert np.max(np.abs(period_constraints("p49-w5"))) < 1e-9


def test_generic_parameters_violate_the_constraints():
    values = period_constraints("t47-c1-w2", GENERIC["t47-c1-w2"])

    assert np.max(np.abs(values)) > 1e-6


def _match(triples, point):
    for key, value in triples.items():
        if same_point(key, point, 1e-9):
            return value
    raise KeyError(point)


@pytest.mark.parametrize("id", VARIANTS)
def test_closed_form_residues_match_computed(id):
    params = GENERIC[id]
    formulas = residue_formulas(id, params)
    report = period_report(build(id, params).data, mode="exact")

    for end in report.ends:
        computed = np.array(end.residues)
        printed = np.array(_match(formulas, end.point))
        scale = max(1.0, float(np.max(np.abs(printed))))
        np.testing.assert_allclose(computed / scale, printed / scale, atol=1e-9)


SKEWED = {
    "sigma": ExactComplex(Fraction(3, 7), Fraction(1, 5)),
    "tau": ExactComplex(Fraction(-2, 9), Fraction(1, 3)),
    "b": ExactComplex(Fraction(5, 4), Fraction(-1, 2)),
    "theta": ExactComplex(Fraction(2, 3), 1),
}


@pytest.mark.parametrize(
    "id, component, value",
    [
        ("t47-c1-w2", 0, 1.3538 + 3.9547j),
        ("t47-c1-w5", 1, -14.510 - 1.491j),
    ],
)
def test_closed_form_residue_at_i_with_complex_theta(id, component, value):
    formulas = residue_formulas(id, SKEWED)
    report = period_report(build(id, SKEWED).data, mode="exact")
    computed = np.array(_match({end.point: end.residues for end in report.ends}, ExactComplex(0, 1)))
    printed = np.array(_match(formulas, ExactComplex(0, 1)))

    assert complex(printed[component]) == pytest.approx(value, abs=2e-3)
    np.testing.assert_allclose(computed, printed, atol=1e-9)


def _random_params(id, rng):
    family = get_family(id)
    while True:
        params = {name: complex(*rng.uniform(-2, 2, size=2)) for name in family.param_names}
        try:
            validate(id, params)
        except InvalidParams:
            continue
        return params


@pytest.mark.parametrize("id", VARIANTS)
def test_closed_form_residues_match_contour_integrals(id):
    rng = np.random.default_rng(20)
    for _ in range(20):
        params = _random_params(id, rng)
        formulas = residue_formulas(id, params)
        report = period_report(build(id, params).data, mode="numeric")

        for end in report.ends:
            printed = np.array(_match(formulas, end.point))
            scale = max(1.0, float(np.max(np.abs(printed))))
            assert np.max(np.abs(np.array(end.residues) - printed)) / scale < 1e-8


@pytest.mark.parametrize("id", ["ms", "kw", "canon-g42"])
def test_families_without_closed_forms(id):
    with pytest.raises(Unsupported):
        residue_formulas(id)


def test_build_variant_matches_named_family():
    params = example_params("t47-c1-w1")
    data = build_variant("case1", 1, params)
    named = build("t47-c1-w1", params).data

    assert data.g == named.g
    assert data.omega.h == named.omega.h


def test_build_variant_pole_orders():
    params = example_params("t47-c1-w1")
    plain = build_variant("case1", 1, params)
    deeper = build_variant("case1", 3, params)

    assert deeper.omega.h.den.degree == plain.omega.h.den.degree + 2
    with pytest.raises(InputError):
        build_variant("case1", 11, params)
