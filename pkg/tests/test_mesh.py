import numpy as np
import pytest

from gaussmap_lab.algebra.points import INF
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.algebra.scalars import I
from gaussmap_lab.core.exceptions import InputError, PathThroughPole, PeriodFailure
from gaussmap_lab.families import get_family
from gaussmap_lab.mesh import (
    ChartGrid,
    boundary_components,
    form_poles,
    generate_mesh,
    integrate_path,
    normal_deviation,
    read_obj,
    write_obj,
)
from gaussmap_lab.schemas import GridSpec
from gaussmap_lab.weierstrass.data import WeierstrassData, alpha

ONE_OVER_Z = RationalMap.of(Poly([1]), Poly([0, 1]))


@pytest.fixture
def catenoid_mesh(catenoid):
    grid = GridSpec(kind="polar", r_min=0.2, r_max=5.0, radial=32, angular=64)
    return generate_mesh(catenoid, grid, provenance={"family": "catenoid", "params_hash": "abc123"})


def _t47_data() -> WeierstrassData:
    family = get_family("t47-c1-w1")
    return family.build(family.example_params()).data


def test_integrate_upper_semicircle():
    value = integrate_path(ONE_OVER_Z, 1, -1, center=0)

    assert value[0] == pytest.approx(1j * np.pi, abs=1e-10)


def test_integrate_full_circle():
    value = integrate_path(ONE_OVER_Z, 2, 2, center=0)

    assert value[0] == pytest.approx(2j * np.pi, abs=1e-10)


def test_integrate_segment_of_constant_form():
    form = [RationalMap.of(Poly([1])), RationalMap.of(Poly([0])), RationalMap.of(Poly([0]))]
    value = integrate_path(form, 0, 1 + 1j)

    np.testing.assert_allclose(value, [1 + 1j, 0, 0], atol=1e-12)


def test_catenoid_loop_has_no_real_period(catenoid):
    value = integrate_path(alpha(catenoid), 1, 1, center=0)

    np.testing.assert_allclose(value.real, 0, atol=1e-9)
    assert value[2] == pytest.approx(2j * np.pi, abs=1e-9)


def test_path_through_pole():
    with pytest.raises(PathThroughPole):
        integrate_path(ONE_OVER_Z, -1, 1)


def test_arc_through_pole():
    shifted = RationalMap.of(Poly([1]), Poly([-1, 1]))

    with pytest.raises(PathThroughPole):
        integrate_path(shifted, 1, 1, center=0)
    with pytest.raises(PathThroughPole):
        integrate_path(shifted, -1j, 1j, center=0)


def test_arc_missing_pole_on_its_circle():
    shifted = RationalMap.of(Poly([1]), Poly([-1, 1]))
    # the left half of |z| = 1 stays away from z = 1
    value = integrate_path(shifted, 1j, -1j, center=0)

    assert np.isfinite(value).all()


def test_form_poles_of_alpha(catenoid):
    poles = form_poles(alpha(catenoid))

    assert poles.size > 0
    np.testing.assert_allclose(np.abs(poles), 0.0, atol=1e-12)


def test_arc_endpoints_on_one_circle():
    with pytest.raises(InputError):
        integrate_path(ONE_OVER_Z, 1, 2j, center=0)


def test_catenoid_mesh_is_rotational(catenoid_mesh):
    height = catenoid_mesh.vertices[:, 2].reshape(32, 64)

    assert np.ptp(height, axis=1).max() < 1e-6
    radii = np.geomspace(0.2, 5.0, 32)
    np.testing.assert_allclose(height[:, 0], np.log(radii / 0.2), atol=1e-6)


def test_catenoid_mesh_quality(catenoid_mesh):
    assert catenoid_mesh.closure_ok
    assert catenoid_mesh.isothermality < 1e-4
    assert catenoid_mesh.boundary_components == 2
    assert len(catenoid_mesh.faces) == 31 * 64
    assert normal_deviation(catenoid_mesh) < 5.0
    assert catenoid_mesh.provenance["ends"] == ["0", "inf"]


def test_family_annulus_closes():
    grid = GridSpec(kind="polar", r_min=0.35, r_max=0.6, radial=24, angular=192)
    mesh = generate_mesh(_t47_data(), grid)

    assert mesh.closure_ok
    assert mesh.isothermality < 1e-4
    assert mesh.boundary_components == 2
    assert mesh.cycles > 0


def test_family_window_around_every_end():
    # 0, i and -i are holes in the window; its outer rim faces the end at infinity
    grid = GridSpec(kind="rect", window=(-2.0, 2.0, -2.0, 2.0), nx=121, ny=121, exclusion=0.1)
    mesh = generate_mesh(_t47_data(), grid)

    assert mesh.closure_ok
    assert mesh.closure < 1e-6 * mesh.diameter
    assert mesh.isothermality < 1e-4
    assert mesh.boundary_components == 4
    assert mesh.provenance["ends"] == ["inf", "1i", "-1i", "0"]


def test_rect_window_has_a_hole_per_puncture():
    data = _t47_data()
    grid = GridSpec(kind="rect", window=(-2.0, 2.0, -2.0, 2.0), nx=41, ny=41, exclusion=0.15)
    mesh = generate_mesh(data, grid, allow_period_failure=True)

    # outer rim plus holes at 0, i and -i
    assert mesh.boundary_components == 4


def test_non_real_residue_is_refused():
    g = RationalMap.of(Poly([0, 1]))
    h = RationalMap.of(Poly([I]), Poly([0, 0, 1]))
    data = WeierstrassData.of(g, h, [0, INF])
    grid = GridSpec(kind="polar", r_min=0.5, r_max=2.0, radial=8, angular=32)

    with pytest.raises(PeriodFailure):
        generate_mesh(data, grid)

    mesh = generate_mesh(data, grid, allow_period_failure=True)
    assert not mesh.closure_ok


def test_grid_exclusion():
    grid = ChartGrid.rect((-1.0, 1.0, -1.0, 1.0), nx=21, ny=21, exclusion=0.15, avoid=[0, INF])

    assert not grid.mask[10, 10]
    assert grid.mask.sum() == 21 * 21 - 9
    with pytest.raises(InputError):
        ChartGrid.rect((-0.1, 0.1, -0.1, 0.1), nx=3, ny=3, exclusion=1.0, avoid=[0])


def test_boundary_components_of_two_squares():
    assert boundary_components([(0, 1, 2, 3)]) == 1
    assert boundary_components([(0, 1, 2, 3), (4, 5, 6, 7)]) == 2
    assert boundary_components([(0, 1, 2, 3), (1, 4, 5, 2)]) == 1


def test_obj_file(catenoid_mesh, tmp_path):
    path = write_obj(catenoid_mesh, tmp_path / "out" / "catenoid.obj")
    obj = read_obj(path)

    assert obj.vertices.shape == (32 * 64, 3)
    assert obj.normals.shape == obj.vertices.shape
    assert obj.faces == catenoid_mesh.faces
    np.testing.assert_allclose(obj.vertices, catenoid_mesh.vertices, rtol=1e-10, atol=1e-10)
    assert obj.header["family"] == "catenoid"
    assert obj.header["params-hash"] == "abc123"
    assert obj.header["ends"] == "0,inf"
    assert float(obj.header["closure"]) <= 1e-6
    assert "isothermality" in obj.header


def test_malformed_obj(tmp_path):
    path = tmp_path / "bad.obj"
    path.write_text("v 1 2 x\n", encoding="utf-8")

    with pytest.raises(InputError):
        read_obj(path)
