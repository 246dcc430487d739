import json

import pytest

from oblivcast.cli import main
from oblivcast.fileio import InstanceError, InstanceFile, to_dot
from oblivcast.graphs import make_two_cycles
from oblivcast.schemes import ListAssignment, hypercube_lists, theorem1_construction
from oblivcast.simulate import simulate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def construct(tmp_path, capsys, *args):
    path = tmp_path / "inst.json"
    code, _, err = run(capsys, "construct", *args, "--out", str(path))
    assert code == 0, err
    return path


def test_construct_theorem1(tmp_path, capsys):
    path = construct(tmp_path, capsys, "theorem1", "--n", "6")
    doc = json.loads(path.read_text())
    assert doc["n"] == 6 and len(doc["edges"]) == 7
    assert doc["labels"][4] == "100"
    inst = InstanceFile.load(path)
    g, lists = theorem1_construction(6)
    assert inst.graph == g and inst.lists == lists


def test_construct_hypercube_and_two_cycles(tmp_path, capsys):
    inst = InstanceFile.load(construct(tmp_path, capsys, "hypercube", "--d", "3"))
    assert (inst.graph.n, inst.graph.num_edges) == (8, 12)
    assert inst.lists == hypercube_lists(3)[1]
    inst = InstanceFile.load(construct(tmp_path, capsys, "--family", "two-cycles", "--k", "2"))
    assert (inst.graph.n, inst.graph.num_edges) == (9, 10)
    assert inst.lists is None


def test_construct_is_byte_deterministic(capsys):
    _, a, _ = run(capsys, "construct", "theorem2", "--n", "11")
    _, b, _ = run(capsys, "construct", "theorem2", "--n", "11")
    assert a == b and a.endswith("\n")


def test_construct_power_of_two_suggests_hypercube(capsys):
    code, _, err = run(capsys, "construct", "theorem1", "--n", "8")
    assert code == 2
    assert "hypercube" in err


def test_construct_missing_parameter(capsys):
    code, _, err = run(capsys, "construct", "theorem1")
    assert code == 2 and "--n" in err


def test_simulate(tmp_path, capsys):
    path = construct(tmp_path, capsys, "theorem1", "--n", "6")
    code, out, _ = run(capsys, "simulate", str(path), "--source", "0", "--model", "fa")
    assert code == 0 and out.strip() == "completion: 3"
    g, lists = theorem1_construction(6)
    assert simulate(g, lists, 0).completion == 3


def test_simulate_k2_and_trace(tmp_path, capsys):
    path = construct(tmp_path, capsys, "clique", "--n", "2")
    trace_path = tmp_path / "trace.json"
    code, out, _ = run(capsys, "simulate", str(path), "--source", "1", "--trace", "--out", str(trace_path))
    assert code == 0
    assert out.splitlines()[0] == "completion: 1"
    assert "round 1: 1->0" in out
    doc = json.loads(trace_path.read_text())
    assert doc["calls"] == [[[1, 0]]] and doc["informed_at"] == [1, 0]


def test_simulate_empty_lists_exit_one(tmp_path, capsys):
    path = tmp_path / "empty.json"
    g, _ = hypercube_lists(1)
    InstanceFile(g, ListAssignment.of([[], []])).save(path)
    code, out, _ = run(capsys, "simulate", str(path))
    assert code == 1 and out.strip() == "completion: inf"


def test_simulate_errors(tmp_path, capsys):
    path = construct(tmp_path, capsys, "two-cycles", "--k", "1")
    assert run(capsys, "simulate", str(path))[0] == 2
    path = construct(tmp_path, capsys, "theorem1", "--n", "6")
    assert run(capsys, "simulate", str(path), "--source", "9")[0] == 2


def test_verify_streams_records(tmp_path, capsys):
    out_path = tmp_path / "rep.jsonl"
    code, out, _ = run(capsys, "verify", "theorem2", "--range", "3..20", "--out", str(out_path))
    assert code == 0
    rows = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert [r["n"] for r in rows] == list(range(3, 21))
    assert sum(r["skipped"] for r in rows) == 3  # 4, 8, 16
    assert all(r["passed"] for r in rows)
    assert "15/15 passed, 3 skipped" in out


def test_verify_hypercube_compare(capsys):
    code, out, _ = run(capsys, "verify", "hypercube", "--range", "1..4", "--compare", "na", "a")
    assert code == 0
    first = json.loads(out.splitlines()[0])
    assert set(first["comparison"]) == {"na", "a"}


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "12")
    assert code == 0
    assert "m: 4" in out and "L: 1" in out
    assert "theorem2: m=4 k=2 r=0" in out
    assert "theorem2 edge budget: 32" in out


def test_search(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--k", "1", "--model", "fa")
    assert code == 0 and out.startswith("best: 4\n")
    path = construct(tmp_path, capsys, "two-cycles", "--k", "1")
    code, out, _ = run(capsys, "search", str(path), "--list-space", "subset")
    assert out.startswith("best: 4\n")
    code, out, _ = run(capsys, "search", "--k", "1", "--assignment-budget", "3")
    assert "non-exact" in out


def test_export_dot(tmp_path, capsys):
    path = construct(tmp_path, capsys, "theorem1", "--n", "5")
    code, out, _ = run(capsys, "export-dot", str(path))
    assert code == 0
    assert out.startswith("graph G {")
    assert '4 [label="110"];' in out
    assert "  2 -- 4;" in out
    assert out == to_dot(InstanceFile.load(path).graph)


def test_round_trip():
    for inst in (
        InstanceFile(*theorem1_construction(13), {"family": "theorem1", "n": 13}),
        InstanceFile(make_two_cycles(3)),
    ):
        assert InstanceFile.loads(inst.dumps()) == inst
        assert InstanceFile.loads(inst.dumps()).dumps() == inst.dumps()


def test_rejects_inconsistent_files():
    good = InstanceFile(*hypercube_lists(2)).to_dict()
    bad = dict(good, lists={"0": [3], "1": [0], "2": [0], "3": [1]})
    with pytest.raises(InstanceError):
        InstanceFile.from_dict(bad)
    with pytest.raises(InstanceError):
        InstanceFile.from_dict(dict(good, edges=[[0, 5]]))
    with pytest.raises(InstanceError):
        InstanceFile.from_dict(dict(good, version=99))
