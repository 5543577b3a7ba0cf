from fractions import Fraction

import pytest
from pydantic import ValidationError

from gaussmap_lab.algebra.points import INF
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.scalars import ExactComplex
from gaussmap_lab.families.registry import build
from gaussmap_lab.schemas import (
    CertificateOut,
    GridSpec,
    ParamsIn,
    PuncturesIn,
    RationalMapIn,
    SolveSpec,
    TRReportOut,
    WeierstrassDataIn,
    dump_scalar,
    parse_point,
    parse_scalar,
)
from gaussmap_lab.solver.certificate import verify_solution
from gaussmap_lab.sphere.report import tr_report


def test_scalar_forms():
    assert parse_scalar([1, 2]) == ExactComplex(1, 2)
    assert parse_scalar(["1/2", "-3"]) == ExactComplex(Fraction(1, 2), -3)
    assert parse_scalar([0.5, 0.25]) == 0.5 + 0.25j
    assert parse_scalar(3) == ExactComplex(3)
    assert parse_scalar("sqrt(13/2)") == pytest.approx(13**0.5 / 2**0.5)
    assert parse_point("∞") is INF
    assert parse_point("inf") is INF


def test_scalar_dump():
    assert dump_scalar(ExactComplex(Fraction(1, 3), -2)) == ["1/3", "-2"]
    assert dump_scalar(1.5 - 2j) == [1.5, -2.0]
    assert dump_scalar(INF) == "inf"


@pytest.mark.parametrize("value", [[1, 2, 3], True, "sigma", {"re": 1}])
def test_bad_scalars(value):
    with pytest.raises(ValueError):
        parse_scalar(value)


def test_rational_map_input():
    g = RationalMapIn.model_validate({"num": [0, 0, 1]}).to_map()

    assert g.num == Poly([0, 0, 1])
    assert g.degree == 2


def test_zero_denominator_is_invalid():
    with pytest.raises(ValidationError):
        RationalMapIn.model_validate({"num": [1], "den": [0, 0]})


def test_punctures_and_data():
    dom = PuncturesIn.model_validate([[0, 1], [0, -1], "inf"]).to_domain()
    data = WeierstrassDataIn.model_validate(
        {"g": {"num": [0, 1]}, "omega": {"num": [1], "den": [0, 0, 1]}, "punctures": [0, "inf"]}
    ).to_data()

    assert dom.n == 3
    assert dom.has_infinity
    assert data.g.degree == 1


def test_params_accept_expressions():
    params = ParamsIn.model_validate({"sigma": "exp(i*pi/6)", "tau": 0, "b": [-1, 0]}).to_dict()

    assert params["tau"] == 0
    assert params["b"] == ExactComplex(-1)


def test_solve_spec_roles():
    spec = SolveSpec.model_validate(
        {"family": "t47-c1-w1", "fix": {"tau": 0}, "tie": {"b": "-3/13*sigma"}, "free": ["sigma"], "unit": ["sigma"]}
    )

    assert spec.free_parts() == [("sigma", "re"), ("sigma", "im")]
    assert spec.starts >= 1


def test_solve_spec_partial_freedom():
    spec = SolveSpec.model_validate({"family": "p49-w5", "free": ["re:b1", "im:b1", "re:b1"]})

    assert spec.free_parts() == [("b1", "re"), ("b1", "im")]


@pytest.mark.parametrize(
    "payload",
    [
        {"family": "ms", "free": []},
        {"family": "ms", "free": ["sigma"], "tie": {"sigma": "1"}},
        {"family": "ms", "free": ["a"], "fix": {"t": 0}, "tie": {"t": "a"}},
        {"family": "ms", "free": ["a"], "unit": ["sigma"]},
        {"family": "ms", "free": ["mod:a"]},
        {"family": "ms", "free": ["a"], "tol": 0},
    ],
)
def test_invalid_solve_specs(payload):
    with pytest.raises(ValidationError):
        SolveSpec.model_validate(payload)


def test_grid_spec():
    assert GridSpec().kind == "polar"
    with pytest.raises(ValidationError):
        GridSpec(kind="rect")
    with pytest.raises(ValidationError):
        GridSpec(r_min=2.0, r_max=1.0)
    with pytest.raises(ValidationError):
        GridSpec(kind="rect", window=(1.0, -1.0, -1.0, 1.0))


def test_report_dump_is_json_ready():
    instance = build("ms")
    payload = TRReportOut.model_validate(tr_report(instance.g, instance.dom)).model_dump(mode="json")

    assert payload["D"] == 2
    assert payload["nu"] == "5/2"
    assert payload["ramified"][0]["weight"] == "1/2"
    assert all(isinstance(v["value"], (list, str)) for v in payload["omitted"])


def test_certificate_dump():
    payload = CertificateOut.model_validate(verify_solution("ms")).model_dump(mode="json")

    assert payload["passed"] is True
    assert payload["checks"]["periods"] is True
    assert payload["expected"]["curvature"] == -8
    residues = payload["period"]["ends"][0]["residues"]
    assert len(residues) == 3
    assert all(len(pair) == 2 and all(isinstance(v, float) for v in pair) for pair in residues)
