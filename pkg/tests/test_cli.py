"""End-to-end tests of the command-line interface."""

import json

import pytest

from geodex.cli import main


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_convert_center(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["convert", "--input", "-"], '{"t":1,"z":[0,0]}', monkeypatch
    )
    assert code == 0
    assert json.loads(out) == {"ball": [0.0, 0.0, 0.0]}


def test_convert_round_trip(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["convert", "--input", "-"], '{"t":0.7,"z":[0.2,-0.4]}', monkeypatch
    )
    ball = json.loads(out)["ball"]
    code, out, _ = run_cli(
        capsys, ["convert", "--input", "-"], json.dumps({"ball": ball}), monkeypatch
    )
    back = json.loads(out)
    assert back["t"] == pytest.approx(0.7, abs=1e-12)
    assert back["z"][0] == pytest.approx(0.2, abs=1e-12)
    assert back["z"][1] == pytest.approx(-0.4, abs=1e-12)


def test_malformed_payload_exits_1(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["convert", "--input", "-"], '{"t":1}', monkeypatch)
    assert code == 1
    assert "payload.z" in err

    code, _, err = run_cli(
        capsys, ["convert", "--input", "-"], '{"t":-2,"z":[0,0]}', monkeypatch
    )
    assert code == 1
    assert "payload.t" in err


def test_invalid_json_exits_1(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["convert", "--input", "-"], "{nope", monkeypatch)
    assert code == 1
    assert "JSON" in err


def test_endpoints_command(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["endpoints", "--input", "-"], '{"xi":[1,0],"eta":[0,0]}', monkeypatch
    )
    assert code == 0
    d = json.loads(out)
    assert d["past"] == [-1.0, -0.0, 0.0]
    assert d["future"] == [1.0, 0.0, -0.0]


def test_geodesic_command_matches_library(capsys, monkeypatch):
    payload = '{"b":[[0,0],[1,0],[1,0],[0,0]],"t_max":1.0,"num":3}'
    code, out, _ = run_cli(capsys, ["geodesic", "--input", "-"], payload, monkeypatch)
    assert code == 0
    d = json.loads(out)
    import numpy as np

    last = d["samples"][-1]
    assert last["xi"][0] == pytest.approx(np.sinh(1.0))
    assert d["killing"] == [[0.5, -0.0], [0.0, -0.0], [-0.5, 0.0]]
    assert d["norm_constant"] == 0.0
    # t = 0 leaves the chart and is reported, not fatal
    assert "error" in d["samples"][0]


def test_surface_json_summary(capsys, monkeypatch):
    payload = '{"b":[[0,0],[1,0],[1,0],[0,0]],"grid":[16,16]}'
    code, out, _ = run_cli(capsys, ["surface", "--input", "-"], payload, monkeypatch)
    assert code == 0
    d = json.loads(out)
    assert d["max_abs_H"] < 1e-6
    assert d["totally_geodesic"] is True


def test_surface_obj_export(capsys, monkeypatch):
    payload = '{"b":[[0,0],[1,1],[1,0],[0,0]],"grid":[6,6]}'
    code, out, _ = run_cli(
        capsys, ["surface", "--input", "-", "--format", "obj"], payload, monkeypatch
    )
    assert code == 0
    assert out.startswith("v ")
    assert sum(1 for l in out.splitlines() if l.startswith("v ")) == 36


def test_surface_csv_export(capsys, monkeypatch):
    payload = '{"b":[[0,0],[1,1],[1,0],[0,0]],"grid":[6,6]}'
    code, out, _ = run_cli(
        capsys, ["surface", "--input", "-", "--format", "csv"], payload, monkeypatch
    )
    assert code == 0
    assert out.splitlines()[0] == "r,t,x,y,z,H,K_rt,K_tt"


def test_verify_single_suite(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["verify", "--suite", "kahler", "--seed", "7"])
    assert code == 0
    d = json.loads(out)
    assert d["passed"] is True
    assert all(c["suite"] == "kahler" for c in d["checks"])


def test_verify_unknown_suite(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["verify", "--suite", "nope"])
    assert code == 1
    assert "unknown suite" in err


def test_verify_deterministic_output(capsys, monkeypatch):
    _, out1, _ = run_cli(capsys, ["verify", "--suite", "geoflow", "--seed", "3"])
    _, out2, _ = run_cli(capsys, ["verify", "--suite", "geoflow", "--seed", "3"])
    assert out1 == out2


def test_verify_tolerance_override_failure(capsys, monkeypatch):
    # absurdly tight overrides force a clean tolerance failure: exit 2
    code, out, _ = run_cli(
        capsys,
        ["verify", "--suite", "hyp3", "--seed", "7", "--tol-fd", "1e-30", "--tol-closed", "1e-30"],
    )
    assert code == 2
    assert json.loads(out)["passed"] is False
