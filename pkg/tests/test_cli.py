import json
import subprocess
import sys

import pytest

from symcolor.cli import run
from symcolor.graph import FiniteGraph, from_edge_list

C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.json"
    p.write_text(C5.dumps())
    return str(p)


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_g2_reports_degree(capsys):
    code, out, _ = invoke(capsys, "gen", "--gadget", "g2", "--blob", "2", "--horizon", "4")
    assert code == 0 and json.loads(out)["max_degree"] == 3


def test_compute_odd_c5(capsys, c5_file):
    code, out, _ = invoke(capsys, "compute", "--graph", c5_file, "--param", "chi-odd")
    assert code == 0 and json.loads(out)["value"] == 5


@pytest.mark.parametrize("param", ["chi", "chi-d", "chi-total", "chi-n", "d-total"])
def test_compute_witness_reverifies(capsys, tmp_path, c5_file, param):
    _, out, _ = invoke(capsys, "compute", "--graph", c5_file, "--param", param)
    witness = tmp_path / "w.json"
    witness.write_text(json.dumps(json.loads(out)["witness"]))
    notion = {"chi": "proper-vertex", "chi-d": "proper-vertex", "chi-total": "total", "chi-n": "nd-vertex"}
    args = ["verify", "--graph", c5_file, "--coloring", str(witness)]
    if param in notion:
        args += ["--notion", notion[param]]
    if param.endswith("-d") or param == "d-total":
        args.append("--distinguishing")
    code, out, _ = invoke(capsys, *args)
    assert code == 0 and json.loads(out)["valid"]


def test_verify_invalid_exits_1(capsys, tmp_path, c5_file):
    col = tmp_path / "c.json"
    col.write_text(json.dumps({"kind": "vertex", "vertex": {str(v): v % 2 for v in range(5)}}))
    code, out, _ = invoke(capsys, "verify", "--graph", c5_file, "--coloring", str(col), "--notion", "proper-vertex")
    assert code == 1 and not json.loads(out)["valid"]


def test_verify_missing_vertex_exits_2(capsys, tmp_path, c5_file):
    col = tmp_path / "c.json"
    col.write_text(json.dumps({"kind": "vertex", "vertex": {"0": 0, "1": 1, "2": 0, "4": 1}}))
    code, _, err = invoke(capsys, "verify", "--graph", c5_file, "--coloring", str(col), "--notion", "odd")
    assert code == 2 and "schema mismatch: vertex 3 uncolored" in err
    assert len(err.strip().splitlines()) == 1


def test_usage_errors_exit_2(capsys, c5_file):
    assert invoke(capsys, "compute", "--graph", c5_file, "--param", "nope")[0] == 2
    assert invoke(capsys, "frobnicate")[0] == 2
    code, _, err = invoke(capsys, "compute", "--graph", "/nonexistent.json", "--param", "chi")
    assert code == 2 and "cannot read" in err


def test_resource_error_exits_2(capsys, c5_file):
    code, _, err = invoke(capsys, "compute", "--graph", c5_file, "--param", "chi-total-d", "--budget", "3")
    assert code == 2 and err


def test_gen_export_round_trip(capsys, tmp_path):
    _, out, _ = invoke(capsys, "gen", "--gadget", "h", "--horizon", "4")
    original = FiniteGraph.from_json(json.loads(out))
    jpath = tmp_path / "h.json"
    jpath.write_text(out)
    _, dot_text, _ = invoke(capsys, "export", "--graph", str(jpath), "--to", "dot")
    dpath = tmp_path / "h.dot"
    dpath.write_text(dot_text)
    _, back, _ = invoke(capsys, "export", "--graph", str(dpath), "--to", "json")
    again = FiniteGraph.from_json(json.loads(back))
    assert again == original and again.labels == original.labels


def test_algorithms(capsys, tmp_path):
    _, out, _ = invoke(capsys, "gen", "--gadget", "g", "--horizon", "3")
    gpath = tmp_path / "g.json"
    gpath.write_text(out)
    code, out, _ = invoke(capsys, "algo", "kpw", "--graph", str(gpath))
    assert code == 0 and json.loads(out)["strategy"]
    trace = tmp_path / "trace.jsonl"
    code, out, _ = invoke(capsys, "algo", "listdist", "--graph", str(gpath), "--rotated", "--trace-out", str(trace))
    assert code == 0 and "repairs" in json.loads(out)["trace"] and trace.exists()
    col = tmp_path / "c.json"
    col.write_text(json.dumps(json.loads(out)["coloring"]))
    code, out, _ = invoke(capsys, "algo", "recolor", "--graph", str(gpath), "--coloring", str(col), "--remove", "99")
    assert code == 0


def test_extend_and_refutation(capsys):
    code, out, _ = invoke(capsys, "algo", "extend", "--gadget", "g1", "--palette", "8", "--notion", "odd",
                          "--depth", "3", "--lookahead", "2")
    assert code == 0 and json.loads(out)["depth"] == 3
    code, _, err = invoke(capsys, "algo", "extend", "--gadget", "g1", "--palette", "2",
                          "--notion", "proper-vertex", "--depth", "3")
    assert code == 1 and "RefutationError" in err


def test_listdist_unsupported_exits_1(capsys, tmp_path):
    k33 = from_edge_list(6, [(a, b) for a in range(3) for b in range(3, 6)])
    p = tmp_path / "k33.json"
    p.write_text(k33.dumps())
    assert invoke(capsys, "algo", "listdist", "--graph", str(p))[0] == 1


def test_corpus_small(capsys):
    code, out, _ = invoke(capsys, "corpus", "--max-order", "4")
    doc = json.loads(out)
    assert code == 0 and doc["graphs"] == 10


def test_console_entry_point(c5_file):
    proc = subprocess.run([sys.executable, "-m", "symcolor", "compute", "--graph", c5_file, "--param", "chi"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 3
