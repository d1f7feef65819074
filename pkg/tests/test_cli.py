from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from weylface import serialize
from weylface.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_weights_adjoint_a2():
    code, out, _ = run("weights", "A2", "1,1")
    assert code == 0
    assert len([line for line in out.splitlines() if line.strip().startswith("(")]) == 7


def test_weights_json_round_trips():
    code, out, _ = run("weights", "A2", "1,1", "--json")
    assert code == 0
    ws = serialize.weight_set_from_json(json.loads(out))
    assert len(ws) == 7


def test_faces_hexagon():
    code, out, _ = run("faces", "A2", "1,1", "--J", "1,2", "--json")
    assert code == 0
    data = json.loads(out)
    faces = data["faces"] if isinstance(data, dict) else data
    assert len(faces) == 13
    assert all(f["descriptors"] for f in faces)
    code, text, _ = run("faces", "A2", "1,1", "--J", "1,2")
    assert code == 0 and "13" in text


def test_face_equal_positive_and_negative():
    code, out, _ = run("face-equal", "A2", "1,0", "--I1", "2", "--I2", "")
    assert code == 0 and out.strip() == "equal (criteria a,b,c agree)"
    code, out, _ = run("face-equal", "A2", "1,0", "--I1", "1", "--I2", "")
    assert code == 0 and out.startswith("not equal")


def test_other_commands_succeed():
    for argv in [
        ("roots", "G2"),
        ("truncate", "A2", "1,1", "--I0", "1"),
        ("gvm-hull", "A2", "1,1", "--J", "1"),
        ("face-weights", "A2", "1,0", "--word", "1", "--I0", "1"),
        ("face-weights", "A2", "1,1", "--J", "1", "--I0", "1,2"),
        ("center", "A2", "1,1", "--J", "1"),
        ("maximizer", "A2", "1,1", "--nu", "0,3"),
        ("weakface", "A2", "0,2+1,1", "--Y", "1,1"),
        ("weights", "A2", "1,-1/2", "--J", "1"),
    ]:
        code, out, err = run(*argv)
        assert code == 0, (argv, err)
        assert out.strip()


def test_domain_errors_exit_1_and_name_hypothesis():
    code, _, err = run("weights", "A2", "1,-1")
    assert code == 1 and "dominant" in err
    code, _, err = run("face-equal", "A2", "0,0", "--I1", "1", "--I2", "")
    assert code == 1 and "lambda" in err
    code, _, err = run("weakface", "A2", "1,1", "--Y", "5,5")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("weights", "X9", "1"),
        ("weights", "A2", "1"),
        ("weights", "A2", "a,b"),
        ("truncate", "A2", "1,1", "--I0", "3"),
        ("verify", "nonsense"),
        ("frobnicate",),
        ("verify", "T2", "--max-coord", "-1"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_verify_suites_exit_zero():
    code, out, _ = run("verify", "T33", "--types", "A2,B2", "--max-coord", "2")
    assert code == 0 and "0 violations" in out
    code, out, _ = run("verify", "T2", "--types", "A1,A2", "--max-coord", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == 0 and report["reports"]


def test_output_is_deterministic():
    first = run("faces", "B2", "1,1", "--J", "1", "--json")
    second = run("faces", "B2", "1,1", "--J", "1", "--json")
    assert first == second


def test_console_script_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "weylface", "weights", "A1", "2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "(-2)" in proc.stdout and proc.stdout.startswith("3 weights")
