from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from vtorb import cli, formats
from vtorb.families import named
from vtorb.search import is_isomorphic


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def _file(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_gen_roundtrip(tmp_path, capsys):
    code, out, _ = run(["gen", "--family", "gp", "--n", "5", "--k", "2"], capsys)
    assert code == 0
    g = formats.decode_graph6(out.strip())
    assert is_isomorphic(g, named("petersen"))
    path = str(tmp_path / "spx.s6")
    assert run(["gen", "--family", "spx", "--r", "4", "--s", "1", "--format", "s6", "-o", path], capsys)[0] == 0
    assert formats.decode_sparse6(open(path, "rb").read().strip()).n == 16


def test_gen_edgelist_and_digraph(capsys):
    code, out, _ = run(["gen", "--family", "circulant", "--n", "8", "--steps", "1,4", "--format", "edgelist"], capsys)
    assert code == 0 and formats.parse_edge_list(out).valence() == 3
    code, out, _ = run(["gen", "--family", "px", "--r", "3", "--s", "1"], capsys)
    assert code == 0 and formats.parse_arc_list(out).n == 6


@pytest.mark.parametrize("argv", [
    ["gen", "--family", "psi", "--r", "5"],
    ["gen", "--family", "gp", "--n", "5"],
    ["gen", "--family", "nosuch"],
    ["gen"],
    ["verify", "--suite", "nope", "--family-corpus", "quartic"],
    ["verify"],
    ["invariants", "x.g6", "--cap", "0"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_verify_skipped_is_not_failure(tmp_path, capsys):
    path = _file(tmp_path, "k33.g6", formats.encode_graph6(named("k33")).decode() + "\n")
    code, out, _ = run(["verify", path, "--suite", "regular-orbits"], capsys)
    data = json.loads(out)
    assert code == 0
    assert {c["status"] for c in data["claims"]} == {"skipped"}
    assert data["corpus"] == "k33.g6"


def test_verify_petersen_regular_orbits(tmp_path, capsys):
    path = _file(tmp_path, "p.g6", "IheA@GUAo\n")
    code, out, _ = run(["verify", path, "--suite", "regular-orbits"], capsys)
    statuses = {c["claim"]: c["status"] for c in json.loads(out)["claims"]}
    assert code == 0
    assert statuses["regular-orbit"] == "holds"
    # Petersen is one of the named exceptions to the adjacency claim
    assert statuses["adjacent-regular-orbits"] == "skipped"


def test_invariants_k33(tmp_path, capsys):
    path = _file(tmp_path, "k33.g6", formats.encode_graph6(named("k33")).decode() + "\n")
    code, out, _ = run(["invariants", path], capsys)
    rec = json.loads(out)
    assert code == 0
    assert rec["meo"] == 6 and rec["meo_local"] == 6 and rec["aut_order"] == 72
    assert rec["vertex_transitive"] and rec["arc_transitive"] and rec["exact"]
    assert rec["graph"] == "k33.g6:1"


def test_invariants_multiple_lines_and_disconnected(tmp_path, capsys):
    text = "IheA@GUAo\n\n" + formats.encode_graph6(formats.parse_edge_list("4 2\n0 1\n2 3\n")).decode() + "\n"
    path = _file(tmp_path, "two.g6", text)
    code, out, _ = run(["invariants", path], capsys)
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["graph"] for r in recs] == ["two.g6:1", "two.g6:3"]
    assert recs[1]["connected"] is False and recs[1]["aut_order"] == 8


def test_invariants_edgelist_autodetect(tmp_path, capsys):
    path = _file(tmp_path, "c.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(["invariants", path], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["aut_order"] == 8 and rec["meo"] == 4


def test_output_is_byte_identical(tmp_path, capsys):
    path = _file(tmp_path, "p.g6", "IheA@GUAo\n")
    a = run(["verify", path, "--suite", "all"], capsys)[1]
    b = run(["verify", path, "--suite", "all", "--jobs", "2"], capsys)[1]
    assert a == b and a.endswith("}\n")


def test_cap_from_environment(tmp_path, monkeypatch, capsys):
    path = _file(tmp_path, "p.g6", formats.encode_graph6(named("pappus")).decode() + "\n")
    monkeypatch.setenv("VTORB_CAP", "10")
    rec = json.loads(run(["invariants", path], capsys)[1])
    assert rec["aut_order"] == 216 and rec["exact"] is False
    rec = json.loads(run(["invariants", path, "--cap", "1000"], capsys)[1])
    assert rec["exact"] is True and rec["meo"] == 12


def test_io_errors(tmp_path, capsys):
    assert run(["invariants", str(tmp_path / "missing.g6")], capsys)[0] == 3
    bad = _file(tmp_path, "bad.g6", "I~~~\n")
    code, _, err = run(["invariants", bad], capsys)
    assert code == 3 and "parse error" in err


def test_stdin_via_subprocess():
    proc = subprocess.run([sys.executable, "-m", "vtorb.cli", "invariants", "-"], input=b"IheA@GUAo\n",
                          capture_output=True, check=False, env={**os.environ, "PYTHONHASHSEED": "0"})
    assert proc.returncode == 0
    rec = json.loads(proc.stdout)
    assert rec["graph"] == "stdin:1" and rec["mu"] == 2 and rec["ell"] == 6


def test_verify_csv(tmp_path, capsys):
    path = _file(tmp_path, "p.g6", "IheA@GUAo\n")
    code, out, _ = run(["verify", path, "--suite", "theorems", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("graph,claim,status")
    assert all(line.startswith("p.g6:1,") for line in lines[1:])


def test_verify_theorem_failure_exit_code(tmp_path, capsys):
    path = _file(tmp_path, "k33.g6", formats.encode_graph6(named("k33")).decode() + "\n")
    code, out, _ = run(["verify", path, "--suite", "mu-bound"], capsys)
    assert code == 1
    assert json.loads(out)["claims"][0]["witness"]["order"] == 6


def test_strict_conjectures(tmp_path, capsys):
    path = _file(tmp_path, "k4.g6", formats.encode_graph6(named("k4")).decode() + "\n")
    code, _, err = run(["verify", path, "--suite", "conjectures"], capsys)
    assert code == 0 and "conjecture counterexample" in err
    assert run(["verify", path, "--suite", "conjectures", "--strict-conjectures"], capsys)[0] == 1


def test_family_corpus_quartic(capsys, tmp_path):
    out_path = str(tmp_path / "q.json")
    code = cli.main(["verify", "--family-corpus", "quartic", "--suite", "meo-bound", "--cap", str(1 << 22),
                     "-o", out_path])
    data = json.load(open(out_path))
    assert code == 0
    assert data["summary"]["fails"] == 0 and data["summary"]["graphs"] == 187


def test_quotient(tmp_path, capsys):
    path = _file(tmp_path, "p.g6", "IheA@GUAo\n")
    rec = json.loads(run(["quotient", path, "--perm", "(0 1 2 3 4)(5 6 7 8 9)"], capsys)[1])
    assert rec["blocks"] == 2 and rec["block_sizes"] == [5, 5]
    rec = json.loads(run(["quotient", path], capsys)[1])
    assert rec["blocks"] == 1
    assert run(["quotient", path, "--perm", "(0 1)"], capsys)[0] == 2


def test_merge(tmp_path, capsys):
    g6 = subprocess.run([sys.executable, "-m", "vtorb.cli", "gen", "--family", "spx", "--r", "4", "--s", "1"],
                        capture_output=True, check=True).stdout.decode()
    path = _file(tmp_path, "spx.g6", g6)
    rec = json.loads(run(["merge", path], capsys)[1])
    assert rec["valence"] == 4 and rec["simple"] is True and rec["meo_induced"] == 8
    path = _file(tmp_path, "p.g6", "IheA@GUAo\n")
    rec = json.loads(run(["merge", path], capsys)[1])
    assert rec["merged"] is None
    path = _file(tmp_path, "k5.g6", formats.encode_graph6(formats.parse_edge_list(
        "5 10\n" + "".join(f"{i} {j}\n" for i in range(5) for j in range(i + 1, 5)))).decode() + "\n")
    assert run(["merge", path], capsys)[0] == 0
    path = _file(tmp_path, "c6.g6", formats.encode_graph6(formats.parse_edge_list(
        "6 6\n" + "".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))).decode() + "\n")
    assert run(["merge", path], capsys)[0] == 2
