import json
import re
import subprocess
import sys

import pytest

import corpus
from boolat.cli import main
from boolat.latcore import (
    boolean_cube,
    lattice_from_dict,
    lattice_report,
    lattice_to_dict,
    lattice_to_json,
)


def run_json(capsys, *argv):
    code = main(["--json", "-", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_field_sextic(capsys):
    code, r = run_json(capsys, "field", "X^6 - 2")
    assert code == 0
    assert r["schema"] == 1 and r["command"] == "field"
    assert r["boolean"] is True and len(r["subfields"]) == 4
    assert r["factors_over_L"] == ["X - x", "X + x", "X^2 - x*X + x^2", "X^2 + x*X + x^2"]
    assert r["t"] == 3
    gs = {p["g"]: p["in_D"] for p in r["factor_products"]}
    assert gs["X^3 - 2*x*X^2 + 2*x^2*X - x^3"] is False


def test_field_biquadratic(capsys):
    code, r = run_json(capsys, "field", "X^4 - 10*X^2 + 1")
    assert code == 1
    assert len(r["subfields"]) == 5 and len(r["coatoms"]) == 3
    assert r["report"]["length"] == 2 and r["boolean"] is False


@pytest.mark.parametrize("argv, kind", [
    (["field", "X^2 - 1"], "NotIrreducible"),
    (["field", "X^^2"], "ParseError"),
    (["field", "2*X^2 - 1"], "NotMonic"),
    (["--max-degree", "4", "field", "X^6 - 2"], "DegreeTooLarge"),
    (["ff", "-p", "4", "-n", "3"], "NotPrime"),
    (["group", "--product", "2,x"], "ParseError"),
    (["group", "--cyclic", "100"], "OrderTooLarge"),
])
def test_errors_exit_2(capsys, argv, kind):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.startswith(f"boolat: error: {kind}:")
    assert len(err.strip().splitlines()) == 1


def test_lattice_command(tmp_path, capsys):
    cube = tmp_path / "cube.json"
    cube.write_text(lattice_to_json(boolean_cube(3)))
    code, r = run_json(capsys, "lattice", str(cube))
    assert code == 0 and r["report"]["length"] == 3
    m3 = tmp_path / "m3.json"
    m3.write_text(lattice_to_json(corpus.m3()))
    assert main(["lattice", str(m3)]) == 1
    assert "witness" in capsys.readouterr().out
    bad = tmp_path / "bad.json"
    bad.write_text('{"elements": [')
    assert main(["lattice", str(bad)]) == 2
    assert "ParseError" in capsys.readouterr().err
    assert main(["lattice", str(tmp_path / "missing.json")]) == 2


def test_group_and_ff(capsys):
    code, g = run_json(capsys, "group", "--cyclic", "30")
    assert code == 0 and len(g["subgroups"]) == 8
    code, f = run_json(capsys, "ff", "-p", "2", "-n", "30")
    assert code == 0 and f["lattice"]["elements"][0] == "F_2" and "F_{2^30}" in f["lattice"]["elements"]
    assert f["galois_group_dual_isomorphic"] is True
    assert main(["group", "--product", "2,2"]) == 1


def test_group_cayley(tmp_path, capsys):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}))
    code, r = run_json(capsys, "group", "--cayley", str(path))
    assert code == 0 and r["order"] == 3
    path.write_text(json.dumps({"table": [[0, 1, 2], [1, 0, 0], [2, 0, 1]]}))
    assert main(["group", "--cayley", str(path)]) == 2
    assert "NotAGroup" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["field", "X^6 - 2"],
    ["field", "X^4 - 10*X^2 + 1"],
    ["group", "--product", "2,4"],
    ["ff", "-p", "3", "-n", "12"],
])
def test_round_trip_and_dot(tmp_path, capsys, argv):
    out, dot = tmp_path / "r.json", tmp_path / "h.dot"
    code = main([*argv, "--json", str(out), "--dot", str(dot), "--quiet"])
    assert code in (0, 1)
    assert capsys.readouterr().out == ""
    r = json.loads(out.read_text())
    L = lattice_from_dict(r["lattice"])
    assert lattice_to_dict(L) == r["lattice"]
    assert lattice_report(L).to_json() == r["report"]
    edges = re.findall(r"n\d+ -> n\d+;", dot.read_text())
    assert len(edges) == len(L.covers())
    # deterministic output
    main([*argv, "--json", str(tmp_path / "again.json"), "--quiet"])
    assert (tmp_path / "again.json").read_text() == out.read_text()


def test_flags_before_and_after_subcommand(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["--quiet", "--json", str(a), "group", "--cyclic", "6"])
    main(["group", "--cyclic", "6", "--quiet", "--json", str(b)])
    assert a.read_text() == b.read_text()
    assert capsys.readouterr().out == ""


def test_summary_output(capsys):
    assert main(["group", "--cyclic", "12"]) == 1
    out = capsys.readouterr().out
    assert "Boolean: no" in out and "6 elements" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["group"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "boolat.cli", "ff", "-p", "5", "-n", "6", "--quiet"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == ""
