import json

import pytest

from gaussmap_lab.main import run
from gaussmap_lab.mesh import read_obj


def _invoke(capsys, *args):
    code = run(["--log-level", "WARNING", *args])
    return code, json.loads(capsys.readouterr().out)


def test_verify_canonical_family(capsys):
    code, out = _invoke(capsys, "verify", "--family", "canon-g111")

    assert code == 0
    assert out["passed"]
    assert out["canonical"]["pattern"]["brackets"] == {"0": [4], "1": [2, 1, 1]}


def test_verify_single_omitted_reference(capsys):
    code, out = _invoke(capsys, "verify", "--family", "p49-w5")

    assert code == 0
    tr = out["certificate"]["tr"]
    assert tr["nu"] == "5/2"
    assert tr["D"] == 1
    assert out["certificate"]["period"]["passed"]
    assert out["canonical"] is None


def test_verify_with_params_file(capsys, tmp_path):
    params = tmp_path / "params.json"
    params.write_text(json.dumps({"sigma": "exp(i*pi/6)", "tau": 0, "b": "-3/13*exp(i*pi/6)"}), encoding="utf-8")
    code, out = _invoke(capsys, "verify", "--family", "t47-c1-w1", "--params", f"@{params}")

    assert code == 0
    assert out["certificate"]["checks"]["periods"]


def test_verify_failing_params(capsys):
    code, out = _invoke(capsys, "verify", "--family", "t47-c1-w1", "--params", '{"sigma": 1, "tau": 0, "b": 2}')

    assert code == 1
    assert not out["passed"]
    assert "periods" in out["certificate"]["failing"]


def test_analyze_square(capsys):
    code, out = _invoke(capsys, "analyze", "--map", '{"num": [0, 0, 1]}', "--punctures", "[[0, 1], [0, -1]]")

    assert code == 0
    assert out["tr"]["D"] == 1
    assert out["tr"]["R"] == 2
    assert out["allocation"] is None


def test_list_families(capsys):
    code, out = _invoke(capsys, "list-families")

    assert code == 0
    ids = [f["id"] for f in out["families"]]
    assert "ms" in ids and "p49-w5" in ids
    assert len(ids) == 12


def test_bound_suite_is_reproducible(capsys):
    code, first = _invoke(capsys, "bounds", "--count", "40", "--seed", "7")
    _, second = _invoke(capsys, "bounds", "--count", "40", "--seed", "7")

    assert code == 0
    assert first == second
    assert first["violations"] == []


def test_solve_spec(capsys):
    spec = {
        "family": "t47-c1-w1",
        "fix": {"tau": 0, "theta": 1},
        "tie": {"b": "-3/13*sigma"},
        "free": ["sigma"],
        "unit": ["sigma"],
        "starts": 8,
    }
    code, out = _invoke(capsys, "solve", "--spec", json.dumps(spec))

    assert code == 0
    assert out["status"] == "Solved"
    assert out["names"] == ["re:sigma", "im:sigma"]


def test_mesh_writes_obj(capsys, tmp_path):
    target = tmp_path / "catenoid.obj"
    data = {"g": {"num": [0, 1]}, "omega": {"num": [1], "den": [0, 0, 1]}, "punctures": [0, "inf"]}
    grid = {"kind": "polar", "r_min": 0.5, "r_max": 2.0, "radial": 8, "angular": 32}
    code, out = _invoke(capsys, "mesh", "--data", json.dumps(data), "--grid", json.dumps(grid), "--out", str(target))

    assert code == 0
    assert out["closure_ok"]
    assert out["vertices"] == 8 * 32
    obj = read_obj(target)
    assert obj.header["family"] == "data"
    assert obj.header["params-hash"] == out["provenance"]["params_hash"]


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "--map", "{not json"],
        ["analyze", "--map", '{"num": [1], "den": [0]}'],
        ["verify", "--family", "no-such-family"],
        ["solve"],
    ],
)
def test_input_errors_exit_two(capsys, args):
    code, out = _invoke(capsys, *args)

    assert code == 2
    assert out["error"] in {"input_error", "config_error"}
    assert out["detail"]


def test_usage_error(capsys):
    code, out = _invoke(capsys, "verify")

    assert code == 2
    assert out["error"] == "usage_error"
