import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from pentaspace.cli import main, run
from pentaspace.invariants import rr_closed_form, symplectic_volume
from pentaspace.rational import rational_from_string

SVG = "{http://www.w3.org/2000/svg}"


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_classify(capsys):
    code, rep, _ = invoke(capsys, "classify", "1", "1", "1", "1", "1")
    assert code == 0
    assert rep["results"]["smooth"] and rep["results"]["nearly_regular"]
    assert rep["results"]["toric_generic"] is False

    _, rep, _ = invoke(capsys, "classify", "3", "2", "3", "3", "2")
    assert all(rep["results"][k] for k in ("smooth", "nearly_regular", "toric_generic"))

    _, rep, _ = invoke(capsys, "classify", "1", "1", "1", "1", "2")
    assert rep["results"]["smooth"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "1", "x", "1", "1", "1"],
        ["classify", "1", "0", "1", "1", "1"],
        ["classify", "1", "-2", "1", "1", "1"],
        ["classify", "1", "1/0", "1", "1", "1"],
        ["invariants", "1", "1"],
        ["dh", "--target", "0"],
        ["dh", "--min-critical", "1"],
        ["dh", "--target", "six"],
        ["frobnicate"],
    ],
)
def test_input_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_polytope(capsys, tmp_path):
    svg_path = tmp_path / "out.svg"
    code, rep, _ = invoke(capsys, "polytope", "3", "2", "3", "3", "2", "--svg", str(svg_path))
    res = rep["results"]
    assert code == 0
    assert res["vertices"] == [["1", "2"], ["2", "1"], ["4", "1"], ["5", "2"], ["5", "5"], ["2", "5"], ["1", "4"]]
    assert res["n_vertices"] == "7"
    assert res["area"] == "29/2"
    assert res["boundary_lattice_points"] == "13"
    assert res["lattice_points_brute"] == "22" and res["pick_count"] == "22"
    assert res["cut_corners"] == ["HL", "LH", "LL"]
    assert all(p["status"] == "pass" for p in rep["provenance"])

    root = ET.parse(svg_path).getroot()
    assert root.tag == f"{SVG}svg"
    assert root.get("viewBox") == "0 0 240 240"
    assert len(root.findall(f"{SVG}path")) == 1
    assert len(root.findall(f"{SVG}circle")) == 22
    assert {t.text for t in root.findall(f"{SVG}text")} == {"HL cut", "LH cut", "LL cut"}
    circle = root.find(f"{SVG}circle")
    assert circle.get("r") == "4"


def test_polytope_swapped_and_rational(capsys):
    _, rep, _ = invoke(capsys, "polytope", "2", "3", "3", "2", "3")
    assert rep["results"]["swapped"] == {"a1_a2": True, "a4_a5": True}
    code, rep, _ = invoke(capsys, "polytope", "5/2", "2", "3", "3", "2.5")
    assert code == 1
    assert rep["results"]["error"]["type"] == "NonLatticePolygon"


def test_polytope_not_toric_generic(capsys):
    code, rep, _ = invoke(capsys, "polytope", "1", "1", "1", "1", "1")
    assert code == 1
    assert rep["exit_status"] == 1
    assert rep["results"]["error"]["type"] == "NotToricGeneric"


def test_invariants(capsys):
    code, rep, _ = invoke(capsys, "invariants", "1", "1", "1", "1", "1")
    r = rep["results"]
    assert code == 0
    assert (r["rr"], r["volume"], r["euler"], r["betti"]) == ("6", "5/2", "7", ["1", "5", "1"])

    _, rep, _ = invoke(capsys, "invariants", "3", "2", "3", "3", "2")
    r = rep["results"]
    assert (r["rr"], r["volume"], r["euler"], r["betti"]) == ("22", "29/2", "7", ["1", "5", "1"])

    code, rep, _ = invoke(capsys, "invariants", "2", "1", "2", "2", "1")
    r = rep["results"]
    assert code == 0
    assert "euler" not in r and "betti" not in r
    assert "not nearly-regular" in r["note"]
    assert r["rr"] == "9"


def test_numbers_reparse_exactly(capsys):
    args = ["1/3", "2/5", "1/2", "3/7", "1/4"]
    _, rep, _ = invoke(capsys, "invariants", *args)
    a = [rational_from_string(x) for x in rep["results"]["a"]]
    assert rational_from_string(rep["results"]["rr"]) == rr_closed_form(a)
    assert rational_from_string(rep["results"]["volume"]) == symplectic_volume(a)


def test_dh(capsys):
    _, rep, _ = invoke(capsys, "dh", "--target", "6", "--min-critical", "3")
    assert [p["values"] for p in rep["results"]["pre_filter"]] == [["1", "2", "0"]]
    assert rep["results"]["post_filter"] == []

    _, rep, _ = invoke(capsys, "dh", "--target", "4", "--min-critical", "3")
    assert rep["results"]["pre_filter"] == [] and rep["results"]["post_filter"] == []

    _, rep, _ = invoke(capsys, "dh", "--target", "6", "--min-critical", "2")
    pre = [p["values"] for p in rep["results"]["pre_filter"]]
    assert len(pre) >= 6 and ["4", "0"] in pre


def test_verify(capsys):
    code, rep, _ = invoke(capsys, "verify")
    assert code == 0 and rep["exit_status"] == 0
    res = rep["results"]
    assert res["rr_extension"]["rr_regular"] == "6"
    assert [p["values"] for p in res["no_circle_action"]["pre_filter"]] == [["1", "2", "0"]]
    assert res["no_circle_action"]["post_filter"] == []
    statuses = {p["tag"]: p["status"] for p in rep["provenance"]}
    assert statuses["no-circle-action"] == "pass"
    assert statuses["imported:integrality"] == "imported"
    assert "assumed" in {p["status"] for p in rep["provenance"]}


def test_verify_insufficient_samples(capsys):
    code, rep, _ = invoke(capsys, "verify", "--samples", "5")
    assert code == 1
    assert rep["results"]["error"]["type"] == "InsufficientSamples"


def test_verify_failure_exit_2(capsys, monkeypatch):
    import pentaspace.cli as cli
    from pentaspace.dh import verify_no_circle_action

    monkeypatch.setattr(cli, "verify_no_circle_action", lambda: verify_no_circle_action(target=7))
    code, rep, _ = invoke(capsys, "verify")
    assert code == 2
    assert {p["tag"]: p["status"] for p in rep["provenance"]}["no-circle-action"] == "fail"


def test_deterministic_output(capsys):
    outs = [invoke(capsys, "verify", "--seed", "42")[2] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point_byte_identical():
    cmd = [sys.executable, "-m", "pentaspace", "verify", "--seed", "42"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["schema_version"] == "1"
    assert b"verify: exit 0" in a.stderr


def test_run_returns_report():
    report = run(["classify", "3", "2", "3", "3", "2"])
    assert report.command == "classify"
    assert report.to_json().endswith("\n")
