import json

import pytest

from ramsey_goodness import families as F
from ramsey_goodness.cli import main, parse_graphs
from ramsey_goodness.graph6 import decode, encode
from ramsey_goodness.graphcore import is_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    return code, doc, err


def test_profile_spider(capsys):
    code, doc, _ = run_json(capsys, "profile", "spider:3x2")
    (rec,) = doc["results"]
    assert code == 0 and doc["command"] == "profile"
    assert (rec["n"], rec["e"], rec["leaf_count"], rec["max_susp"]) == (7, 6, 3, 3)


def test_profile_path_table(capsys):
    code, out, _ = run(capsys, "profile", "path:5")
    assert code == 0
    header, _, row = out.splitlines()[:3]
    cols = header.split()
    assert row.split()[cols.index("leaf_count")] == "2"


def test_profile_flags_disconnected(capsys):
    code, doc, _ = run_json(capsys, "profile", encode(F.empty(3)))
    assert code == 0 and doc["results"][0]["warning"] == "disconnected input"


def test_malformed_graph6(capsys):
    code, _, err = run(capsys, "profile", "D~~~~")
    assert code == 2 and "byte 3" in err
    code, _, err = run(capsys, "profile", "nosuchfamily:3")
    assert code == 2


def test_predict(capsys):
    code, doc, _ = run_json(capsys, "predict", "--target", "P:4", "path:5")
    rec = doc["results"][0]
    assert code == 0 and rec["value"] == 6 and rec["flags"]["regime_met"] is False
    code, doc, _ = run_json(capsys, "predict", "--target", "C:5", "cycle:7")
    assert doc["results"][0]["value"] == 13
    code, doc, err = run_json(capsys, "predict", "--target", "C:4", "cycle:7")
    assert code == 0 and doc["results"][0]["value"] == 13 and "even" in err
    assert doc["results"][0]["flags"]["parity_met"] is False


def test_predict_rejects_bad_target(capsys):
    assert run(capsys, "predict", "--target", "K:3", "path:5")[0] == 2
    assert run(capsys, "predict", "--target", "P4", "path:5")[0] == 2


def test_witness_star(capsys):
    code, doc, _ = run_json(capsys, "witness", "--target", "P:4", "star:12")
    rec = doc["results"][0]
    assert code == 0 and rec["result"] == "PASS"
    assert is_isomorphic(decode(rec["host_graph6"]), F.complete_multipartite([3, 3, 3, 3]))


def test_witness_cycle(capsys):
    code, doc, _ = run_json(capsys, "witness", "--target", "C:5", "cycle:5")
    rec = doc["results"][0]
    assert code == 0 and rec["result"] == "PASS"
    assert is_isomorphic(decode(rec["host_graph6"]), F.disjoint_union(F.complete(4), F.complete(4)))


def test_witness_infeasible(capsys):
    # a single vertex against P_6 leaves no room for the decomposition
    code, doc, err = run_json(capsys, "witness", "--target", "P:6", "path:1")
    assert code == 3 and "infeasible" in err
    assert "infeasible" in doc["results"][0]


def test_oracle(capsys):
    code, doc, _ = run_json(capsys, "oracle", "--target", "P:4", "path:4", "--nmax", "6")
    rec = doc["results"][0]
    assert code == 0 and rec["value"] == 5 and rec["witness_verified"]
    assert rec["upper_attestation"]["vertex_count"] == 5


def test_oracle_budget(capsys):
    code, doc, err = run_json(capsys, "oracle", "--target", "C:5", "cycle:5", "--nmax", "8")
    assert code == 4
    assert "budget exhausted at 8; lower bound >= 9 witnessed" in err
    assert doc["results"][0]["lower_bound"] == 9


def test_oracle_range_error(capsys):
    assert run(capsys, "oracle", "--target", "P:4", "path:4", "--nmax", "12")[0] == 2


def test_sweep(capsys):
    code, doc, _ = run_json(capsys, "sweep", "dichotomy", "--max-n", "7", "--s", "3")
    assert code == 0 and doc["results"][0]["violation_count"] == 0


def test_sweep_csv_per_instance(capsys):
    code, out, _ = run(capsys, "sweep", "dichotomy", "--max-n", "6", "--s", "2", "--per-instance", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("sweep,") and len(lines) > 1


def test_json_is_deterministic(capsys):
    args = ("sweep", "peel", "--seed", "5", "--format", "json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    args = ("profile", "spider:3x2", "broom:3x4", "--format", "csv")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_threads_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("RAMSEY_GOODNESS_THREADS", "2")
    base = run(capsys, "oracle", "--target", "P:3", "star:4", "--format", "json")[1]
    assert run(capsys, "oracle", "--target", "P:3", "star:4", "--format", "json", "--threads", "1")[1] == base


def test_output_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["profile", "path:4", "--format", "json", "--output", str(out)]) == 0
    assert json.loads(out.read_text())["results"][0]["n"] == 4
    assert capsys.readouterr().out == ""


def test_file_input(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode(F.path(4)) + "\n\n" + encode(F.cycle(5)) + "\n")
    assert [g.n for _, g in parse_graphs(f"file:{f}")] == [4, 5]
    code, doc, _ = run_json(capsys, "profile", f"file:{f}")
    assert code == 0 and len(doc["results"]) == 2
    f.write_text("A_\n!!\n")
    code, _, err = run(capsys, "profile", f"file:{f}")
    assert code == 2 and "line 2" in err
    assert run(capsys, "profile", f"file:{tmp_path / 'missing'}")[0] == 2


@pytest.mark.parametrize("spec", ["path:7", "cycle:6", "star:5", "spider:3x2", "broom:3x2", "complete:4", "multipartite:2,3"])
def test_family_grammar(spec):
    (_, g), = parse_graphs(spec)
    assert g.n > 0
