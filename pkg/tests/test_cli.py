"""End-to-end tests of the command line interface."""

import json
import math

import pytest

from cambrian.cli import main
from cambrian.lattices import FiniteLattice
from cambrian.suites import catalan


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_cambrian_json(capsys):
    code, out = run_cli(
        capsys,
        "build", "--family", "A", "--rank", "3",
        "--orientation", "1>2,3>2", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["num_elements"] == catalan(4) == 14
    assert len(data["elements"]) == 14
    # Elements come sorted by (length, one-line notation); identity first.
    assert data["elements"][0] == "1,2,3,4"


def test_build_weak_order_i2(capsys):
    code, out = run_cli(capsys, "build", "--family", "I2", "--m", "5")
    assert code == 0
    assert json.loads(out)["num_elements"] == 10


def test_build_b2_quotient(capsys):
    code, out = run_cli(
        capsys, "build", "--family", "B", "--rank", "2", "--orientation", "0>1"
    )
    assert code == 0
    assert json.loads(out)["num_elements"] == math.comb(4, 2) == 6


def test_build_json_round_trip(capsys):
    code, out = run_cli(
        capsys,
        "build", "--family", "A", "--rank", "3", "--orientation", "2>1,2>3",
    )
    assert code == 0
    data = json.loads(out)
    lattice = FiniteLattice.from_covers(
        data["elements"], [tuple(c) for c in data["covers"]]
    )
    assert lattice.n == data["num_elements"]
    assert sorted(lattice.elements) == sorted(data["elements"])
    # The cover relation on labels survives the round trip exactly.
    emitted = {
        (data["elements"][a], data["elements"][b]) for a, b in data["covers"]
    }
    rebuilt = {
        (lattice.elements[a], lattice.elements[b]) for a, b in lattice.covers
    }
    assert emitted == rebuilt


def test_build_dot_output(capsys):
    code, out = run_cli(
        capsys,
        "build", "--family", "A", "--rank", "2", "--format", "dot",
    )
    assert code == 0
    assert out.startswith("digraph")
    assert "rankdir=BT" in out
    assert out.count("->") == 6  # covers of the S3 weak order


def test_build_output_file(tmp_path, capsys):
    target = tmp_path / "lattice.json"
    code, _ = run_cli(
        capsys,
        "build", "--family", "A", "--rank", "2", "--output", str(target),
    )
    assert code == 0
    assert json.loads(target.read_text())["num_elements"] == 6


def test_verify_suites_pass(capsys):
    for argv in (
        ["verify", "--suite", "catalan", "--family", "A", "--max-rank", "4"],
        ["verify", "--suite", "b-tamari", "--max-rank", "3"],
        ["verify", "--suite", "shard", "--family", "A", "--max-rank", "4"],
    ):
        code, out = run_cli(capsys, *argv)
        assert code == 0, out
        report = json.loads(out)
        assert report["passed"] is True
        assert all(c["passed"] for c in report["checks"])


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "no-such-suite"])
    assert err.value.code == 2


def test_fan_a_summary(capsys):
    code, out = run_cli(
        capsys, "fan", "--family", "A", "--rank", "2", "--orientation", "1>2"
    )
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["num_rays"] == 5
    assert data["summary"]["num_cones"] == 5
    assert data["summary"]["simplicial"] is True


def test_fan_h3(capsys):
    code, out = run_cli(capsys, "fan", "--family", "H3", "--orientation", "1>2,2>3")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["num_cones"] == 32
    assert data["summary"]["simplicial"] is True


def test_fan_stasheff(capsys):
    code, out = run_cli(
        capsys,
        "fan", "--family", "A", "--rank", "3",
        "--signature", "uuuu", "--stasheff-check",
    )
    assert code == 0


def test_cap_exceeded_exit_code(capsys):
    code, _ = run_cli(
        capsys, "build", "--family", "A", "--rank", "3", "--cap", "5"
    )
    assert code == 3


def test_cap_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("CAMB_CAP", "5")
    code, _ = run_cli(capsys, "build", "--family", "A", "--rank", "3")
    assert code == 3
    # The flag takes precedence over the environment.
    monkeypatch.setenv("CAMB_CAP", "5")
    code, out = run_cli(
        capsys, "build", "--family", "A", "--rank", "3", "--cap", "100"
    )
    assert code == 0
    monkeypatch.setenv("CAMB_CAP", "not-a-number")
    with pytest.raises(SystemExit) as err:
        main(["build", "--family", "A", "--rank", "2"])
    assert err.value.code == 2


def test_bad_orientation_is_usage_error(capsys):
    code, _ = run_cli(
        capsys, "build", "--family", "A", "--rank", "3", "--orientation", "1>9"
    )
    assert code == 2
