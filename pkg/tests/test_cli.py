import json
import subprocess
import sys
from pathlib import Path
from io import StringIO

import pytest

from quadrisect import data_path
from quadrisect.cli import dump_json, run
from quadrisect.io import parse_diagram, parse_rho

APPENDIX = data_path("appendix.q4d")
RHO = data_path("appendix.rho")


def call(*argv):
    out, err = StringIO(), StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    report = json.loads(out)
    assert report["exit_code"] == code
    return code, report


def test_cover_appendix():
    code, rep = call_json("cover", APPENDIX, "--rho", RHO)
    assert code == 0
    assert rep["H"] == [[1, []], [0, []], [1, []], [1, []], [0, []], [1, []]]
    assert rep["genus"] == 4 and rep["sheets"] == 3
    assert len(rep["lagrangians"]) == 4
    assert all(len(L) == 4 and all(len(v) == 8 for v in L) for L in rep["lagrangians"])


def test_rh_appendix():
    code, out, _ = call("rh", APPENDIX, "--rho", RHO)
    assert code == 0 and out.splitlines()[0] == "genus 4"
    code, rep = call_json("rh", APPENDIX, "--rho", RHO)
    assert rep["genus"] == 4 and rep["cyclic_bound"] == 10 and rep["extends"]


@pytest.mark.parametrize("name,h1", [("lens3.q4d", [0, [3]]), ("rp3.q4d", [0, [2]]), ("appendix.q4d", [0, []]), ("one_bridge.q4d", [0, []])])
def test_heegaard(name, h1):
    code, rep = call_json("heegaard", data_path(name))
    assert code == 0 and rep["H1"] == h1


def test_heegaard_text_and_order():
    code, out, _ = call("heegaard", data_path("lens3.q4d"), "--order", "1324")
    assert code == 0 and "Z/3" in out
    code, _, err = call("heegaard", data_path("lens3.q4d"), "--order", "1123")
    assert code == 2 and "order" in err


def test_surface_appendix():
    code, rep = call_json("surface", APPENDIX)
    assert code == 0
    assert rep["pair_counts"] == {"12": 4, "13": 4, "14": 3, "23": 4, "24": 3, "34": 3}
    assert rep["triple_counts"] == {"1": 2, "2": 2, "3": 2, "4": 3}
    assert rep["euler_characteristic"] == 2 and rep["genus"] == 0 and rep["orientable"]


@pytest.mark.parametrize("name", ["appendix.q4d", "lens3.q4d", "rp3.q4d", "spun_trefoil.q4d", "one_bridge.q4d"])
def test_validate_fixtures(name):
    code, rep = call_json("validate", data_path(name))
    assert code == 0 and rep["passed"]


def test_validate_corrupted(tmp_path):
    lines = open(data_path("spun_trefoil.q4d")).read().splitlines()
    lines = [s + " s3 s3 s3" if s.startswith("tangle2:") else s for s in lines]
    bad = tmp_path / "bad.q4d"
    bad.write_text("\n".join(lines) + "\n")
    code, rep = call_json("validate", bad)
    assert code == 1 and not rep["passed"]


def test_presentations():
    code, rep = call_json("presentations", APPENDIX)
    assert code == 0
    names = set(rep["groups"])
    assert {"sphere", "tangle1", "tangle4", "link12", "link34", "surface123", "surface234"} <= names
    assert len(rep["groups"]["tangle1"]["relators"]) == 6


def test_usage_errors(tmp_path):
    bad = tmp_path / "bad.q4d"
    bad.write_text("bridges: 2\ntangle1: s9\ntangle2:\ntangle3:\ntangle4:\n")
    code, out, err = call("validate", bad)
    assert code == 2 and out == ""
    assert "line 2, column 10" in err and "out of range" in err
    assert call("validate", tmp_path / "missing.q4d")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("cover", APPENDIX)[0] == 2  # --rho is required
    assert call("gen", "lens", "-p", "0")[0] == 2


def test_rho_not_extending(tmp_path):
    rho = tmp_path / "bad.rho"
    # x0 and x5 swap the sheets; the relator x5 x6 of T1 is not killed
    rho.write_text("sheets: 2\n" + "".join(f"x{i}: {'(1 2)' if i in (0, 5) else '()'}\n" for i in range(12)))
    code, rep = call_json("rh", APPENDIX, "--rho", rho)
    assert code == 1 and not rep["extends"] and rep["genus"] == 0
    code, rep = call_json("cover", APPENDIX, "--rho", rho)
    assert code == 1 and "error" in rep


def test_rho_wrong_count(tmp_path):
    rho = tmp_path / "short.rho"
    rho.write_text("sheets: 2\n(1 2)\n(1 2)\n")
    code, _, err = call("rh", APPENDIX, "--rho", rho)
    assert code == 2 and "expected 12" in err


def test_json_is_deterministic():
    for argv in (("cover", APPENDIX, "--rho", RHO), ("surface", APPENDIX), ("validate", APPENDIX), ("heegaard", data_path("lens3.q4d"))):
        first = call(*argv, "--json")[1]
        second = call(*argv, "--json")[1]
        assert first == second and first.endswith("\n")
        assert dump_json(json.loads(first)) == first


def test_gen_outputs_reparse(tmp_path):
    code, out, _ = call("gen", "spun", "-w", "s2 s2 s2")
    assert code == 0
    assert parse_diagram(out) == parse_diagram(open(data_path("spun_trefoil.q4d")).read())
    code, rep = call_json("gen", "lens", "-p", "4")
    assert parse_diagram(rep["q4d"]).bridges == 8
    target = tmp_path / "sum.q4d"
    code, _, _ = call("gen", "sum", data_path("spun_trefoil.q4d"), data_path("lens3.q4d"), "-o", target)
    assert code == 0
    code, rep = call_json("heegaard", target)
    assert rep["H1"] == [0, [3]]
    code, _, err = call("gen", "sum", data_path("lens3.q4d"), data_path("lens3.q4d"), "--mode", "distant")
    assert code == 0


def test_move_braid_keeps_cover(tmp_path):
    moved, moved_rho = tmp_path / "m.q4d", tmp_path / "m.rho"
    code, _, _ = call("move", "braid", APPENDIX, "-w", "s3 s5' s1", "--rho", RHO, "-o", moved, "--rho-output", moved_rho)
    assert code == 0
    parse_rho(moved_rho.read_text(), 12)
    code, rep = call_json("cover", moved, "--rho", moved_rho)
    assert code == 0 and rep["H"] == [[1, []], [0, []], [1, []], [1, []], [0, []], [1, []]]
    code, _, err = call("move", "braid", APPENDIX, "-w", "s12")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quadrisect", "rh", APPENDIX, "--rho", RHO, "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["genus"] == 4


def test_report_fields_are_documented(tmp_path):
    doc = (Path(__file__).resolve().parents[1] / "docs" / "formats.md").read_text()
    reports = [
        call_json("validate", APPENDIX)[1],
        call_json("surface", APPENDIX)[1],
        call_json("heegaard", APPENDIX)[1],
        call_json("presentations", APPENDIX)[1],
        call_json("cover", APPENDIX, "--rho", RHO)[1],
        call_json("rh", APPENDIX, "--rho", RHO)[1],
        call_json("gen", "lens", "-p", "2")[1],
        call_json("move", "braid", APPENDIX, "-w", "s1", "--rho", RHO)[1],
    ]
    for rep in reports:
        for key in rep:
            assert f"`{key}`" in doc or f'"{key}"' in doc, (rep["command"], key)
    for check in reports[0]["checks"]:
        assert f"`{check['status']}`" in doc
