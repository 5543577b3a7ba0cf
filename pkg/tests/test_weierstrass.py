import numpy as np
import pytest

from gaussmap_lab.algebra.points import INF, point_label
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.residue import residue
from gaussmap_lab.algebra.scalars import I, ExactComplex
from gaussmap_lab.core.exceptions import InputError, MetricSingular
from gaussmap_lab.families.registry import build
from gaussmap_lab.weierstrass import (
    WeierstrassData,
    alpha,
    period_report,
    pointwise_geometry,
    regularity_and_completeness,
    total_curvature,
)
from gaussmap_lab.weierstrass.metric import gauss_normal

Z = RationalMap.identity()
ONE = RationalMap.constant(1)


def test_alpha_of_polynomial_data():
    A = alpha(WeierstrassData.of(Z, ONE, [INF]))
    z = np.array([0.3 + 0.2j, -1.1 + 0.5j])

    np.testing.assert_allclose(A.a1.evaluate(z), 0.5 * (1 - z**2))
    np.testing.assert_allclose(A.a2.evaluate(z), 0.5j * (1 + z**2))
    np.testing.assert_allclose(A.a3.evaluate(z), z)
    assert A.null_defect() == 0.0


def test_catenoid_alpha_has_real_residue(catenoid):
    A = alpha(catenoid)

    assert A.a3 == RationalMap.of(Poly([1]), Poly([0, 1]))
    assert residue(A.a3, 0) == 1


def test_catenoid_periods(catenoid):
    report = period_report(catenoid, check_global=True)

    assert report.passed
    assert report.at("0") == pytest.approx((0, 0, 1))
    assert report.global_sums == pytest.approx((0, 0, 0))


def test_ends_outside_the_domain_are_rejected():
    with pytest.raises(InputError):
        WeierstrassData.of(Z, RationalMap.of(Poly([1]), Poly([0, 1])), [INF])


def test_catenoid_metric(catenoid):
    report = regularity_and_completeness(catenoid)

    assert report.regular
    assert report.complete
    assert report.end_orders == {"0": -2, "inf": -2}


def test_pole_of_g_without_double_zero_of_omega_is_degenerate():
    report = regularity_and_completeness(WeierstrassData.of(RationalMap.of(Poly([1]), Poly([0, 1])), ONE, [INF]))

    assert not report.regular
    assert [complex(p) for p in report.degenerate_points] == [0j]


def test_ms_instance_is_regular_and_complete():
    instance = build("ms")
    report = regularity_and_completeness(instance.data)

    assert report.regular
    assert report.complete
    assert report.end_orders[point_label(I)] == -2
    assert report.end_orders[point_label(-I)] == -2


def test_ms_instances_close_up(ms_instance):
    regularity = regularity_and_completeness(ms_instance.data)
    periods = period_report(ms_instance.data, tol=1e-9)

    assert regularity.regular
    assert regularity.complete
    assert periods.passed, [e.label for e in periods.failing()]
    assert total_curvature(ms_instance.data) == -8


def test_kw_instances_close_up(kw_instance):
    regularity = regularity_and_completeness(kw_instance.data)
    periods = period_report(kw_instance.data, tol=1e-9)

    assert regularity.regular
    assert regularity.complete
    assert periods.passed, [e.label for e in periods.failing()]
    assert total_curvature(kw_instance.data) == -16


def test_total_curvature():
    assert total_curvature(WeierstrassData.of(Z, ONE, [INF])) == -4


def test_period_conditions_of_reference_instances():
    for id in ("t47-c1-w1", "p49-w5"):
        report = period_report(build(id).data, tol=1e-10)
        assert report.passed, (id, [e.label for e in report.failing()])


def test_pointwise_geometry():
    flat = pointwise_geometry(WeierstrassData.of(Z, ONE, [INF]), 0)
    branched = pointwise_geometry(WeierstrassData.of(RationalMap.of(Poly.monomial(2)), ONE, [INF]), 0)

    assert flat.curvature == pytest.approx(-4.0)
    assert flat.normal == pytest.approx((0.0, 0.0, -1.0))
    assert branched.curvature == 0.0


def test_pointwise_geometry_rejects_ends(catenoid):
    with pytest.raises(MetricSingular):
        pointwise_geometry(catenoid, 0)


def test_normal_tends_to_north_pole():
    normals = gauss_normal(np.array([1e6, 1e6j, -3e7]))

    np.testing.assert_allclose(normals[:, 2], 1.0, atol=1e-10)
    np.testing.assert_allclose(np.linalg.norm(normals, axis=1), 1.0)


def test_exact_residues_at_i_match_closed_form():
    instance = build(
        "t47-c1-w1",
        {"sigma": ExactComplex(1, 2), "tau": ExactComplex(1, -1), "b": ExactComplex(3), "theta": ExactComplex(2, 1)},
    )
    p = {k: complex(v) for k, v in instance.params.items()}
    s, t, b, th = p["sigma"], p["tau"], p["b"], p["theta"]
    expected = -0.25j * th * (b - s) * (b * (8 * s + 5 * t) - t * (5 * s + 8 * t))

    assert complex(residue(alpha(instance.data).a3, I, mode="exact")) == pytest.approx(expected)
    assert complex(residue(alpha(instance.data).a3, I, mode="numeric")) == pytest.approx(expected, rel=1e-8)
