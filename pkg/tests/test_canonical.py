import pytest

from gaussmap_lab.algebra.points import is_inf
from gaussmap_lab.core.exceptions import Unsupported
from gaussmap_lab.families import verify_canonical
from gaussmap_lab.solver.certificate import verify_solution


def test_case_one_map():
    report = verify_canonical("canon-g111")

    assert report.degree == 4
    assert report.pattern.brackets == {"0": [4], "1": [2, 1, 1]}
    assert report.pattern.case == "case1"
    assert report.cross_ratio == -1
    assert report.clauses == ("degree", "omitted", "infinity_fiber", "allocation", "cross_ratio")


def test_case_two_map():
    report = verify_canonical("canon-g211")

    assert report.pattern.case == "case2"
    assert complex(report.cross_ratio) == pytest.approx(9)
    assert complex(report.quadruple[3]) == pytest.approx(-17j)


def test_case_four_map():
    report = verify_canonical("canon-g42")

    assert report.pattern.brackets == {"0": [2, 2], "1": [2, 2]}
    assert complex(report.cross_ratio) == pytest.approx(-1)


def test_single_omitted_map():
    report = verify_canonical("canon-gd1")
    ones = report.quadruple

    assert report.pattern.brackets == {"1": [1, 1, 1, 1]}
    assert sum(is_inf(p) for p in ones) == 1
    assert sorted(round(complex(p).imag, 9) for p in ones if not is_inf(p)) == [-1.0, 0.0, 1.0]


def test_non_canonical_ids_are_refused():
    with pytest.raises(Unsupported):
        verify_canonical("ms")


@pytest.mark.parametrize("id", ["canon-g111", "canon-g211", "canon-g42", "canon-gd1"])
def test_canonical_maps_carry_their_invariants(id):
    certificate = verify_solution(id)

    assert certificate.passed, certificate.failing
    assert certificate.period is None
