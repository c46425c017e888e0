import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from twistlattice.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out=out)
    return code, out.getvalue()


def ok(*argv):
    code, text = call(*argv)
    assert code == 0, text
    return json.loads(text)


def test_info():
    out = ok("info", "--input", DATA / "u_lattice.json")
    assert out["signature"] == [1, 1] and out["det"] == -1 and out["rank"] == 2


def test_walk():
    out = ok("walk", "--input", DATA / "u_lattice.json")
    assert out["in_chamber"] and out["image"] == [1, 2] and out["length"] == 1


def test_enumerate():
    assert ok("enumerate", "--input", DATA / "u_lattice.json") == {"representatives": [[1, 2], [2, 1]]}
    assert ok("enumerate", "--input", DATA / "pell.json", "--square", 2) == {"representatives": [[1, 0]]}


def test_domain_and_orbits():
    out = ok("domain", "--input", DATA / "pell.json")
    assert out["cone"]["halfspaces"] == [[1, -3], [1, 3]]
    assert out["certificate"]["stabilized"]
    out = ok("orbits", "--input", DATA / "pell.json")
    assert out["representatives"] == [[1, 0]]


def test_walls():
    assert ok("walls", "--input", DATA / "u_walls.json")["walls"] == [[1, -1]]


def test_coxeter():
    out = ok("coxeter", "--input", DATA / "a2_coxeter.json")
    (orbit,) = out["orbits"]
    assert orbit["case"] == "B" and orbit["longest_is_sum_reflection"]
    assert len(out["invariant_generators"]) == 1


@pytest.mark.parametrize("name,classes", [
    ("h1_z_times_c2.json", 4), ("h1_c2_on_c3.json", 1), ("h1_z_negation.json", 2)])
def test_h1(name, classes):
    out = ok("h1", "--input", DATA / name)
    assert out["classes"] == classes == len(out["representatives"])


def test_h1_certificate():
    cert = ok("h1", "--input", DATA / "h1_z_times_c2.json")["certificate"]
    assert cert["exact"] and cert["bound"] >= cert["classes"]


def test_bounds():
    out = ok("bounds", "--dimension", 2, "--self-intersection", 1, "--rank", 3)
    assert out["bounds"][0]["value"] == 96 and out["dual_path_agrees"]
    assert ok("bounds")["bounds"][0]["digits"] == 292


def test_text_format():
    code, text = call("info", "--input", DATA / "u_lattice.json", "--format", "text")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in text.strip().splitlines())
    assert json.loads(lines["signature"]) == [1, 1]


def test_exit_codes(tmp_path):
    code, text = call("frobnicate")
    assert code == 64 and json.loads(text)["error"] == "UnknownSubcommand"
    code, text = call("info", "--input", tmp_path / "missing.json")
    assert code == 65 and json.loads(text)["kind"] == "malformed"
    code, text = call("bounds", "--dimension", 0)
    assert code == 2 and json.loads(text)["invariant"]
    code, _ = call("info", "--square", "x")
    assert code == 65
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"lattice": {"gram": [[1, 2], [3, 4]]}}))
    code, text = call("info", "--input", bad)
    assert code == 2 and json.loads(text)["error"] == "NotSymmetric"
    bad.write_text("{not json")
    assert call("info", "--input", bad)[0] == 65


def test_unknown_fields_rejected(tmp_path):
    p = tmp_path / "typo.json"
    p.write_text(json.dumps({"lattice": {"gram": [[0, 1], [1, 0]]}, "refrence": [1, 1]}))
    code, text = call("info", "--input", p)
    assert code == 65 and "refrence" in json.loads(text)["message"]
    p.write_text(json.dumps({"lattice": {"gram": [[0, 1], [1, 0]]},
                             "parameters": {"squre": 2}}))
    assert call("info", "--input", p)[0] == 65


def test_budget_exit_code(tmp_path):
    p = tmp_path / "walk.json"
    obj = json.loads((DATA / "u_lattice.json").read_text())
    obj["point"] = [9, 1]
    p.write_text(json.dumps(obj))
    code, text = call("walk", "--input", p, "--iteration-cap", 0)
    assert code == 3 and json.loads(text)["error"] == "WalkDiverged"


def test_jobs_do_not_change_output():
    args = ["orbits", "--input", DATA / "pell.json", "--square", 18]
    assert call(*args, "--jobs", 1) == call(*args, "--jobs", 2)


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "twistlattice", "domain", "--input", str(DATA / "pell.json")]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(3)]
    assert outs[0] == outs[1] == outs[2] and outs[0]
