import json

import pytest

from polydiag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_n2(capsys):
    code, out, _ = run(capsys, "enumerate", "2")
    assert code == 0
    assert out.splitlines() == ["(a,a)", "(0,0)", "(a,b)", "(a,0)", "(0,a)", "(a,-a)"]


def test_enumerate_filter_count(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "--filter", "evenly", "--count-only")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "enumerate", "0", "--count-only")
    assert code == 0 and out.strip() == "1"


def test_enumerate_bad_filter(capsys):
    code, _, err = run(capsys, "enumerate", "3", "--filter", "weird")
    assert code == 2 and "unknown filter" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "(a,-a,0)", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["evenly_tagged"] and rows[0]["label"] == "evenly tagged"
    code, _, err = run(capsys, "classify", "(b,a)")
    assert code == 2


def digraph_file(tmp_path, text, name="g.json"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


DIRICHLET_JSON = (
    '{"n": 3, "arrows": [[1,1,"3"],[2,1,"-1"],[1,2,"-1"],[2,2,"2"],[3,2,"-1"],'
    '[2,3,"-1"],[3,3,"3"]]}'
)


def test_invariants_dirichlet(capsys, tmp_path):
    path = digraph_file(tmp_path, DIRICHLET_JSON)
    code, out, _ = run(capsys, "invariants", path)
    assert code == 0
    assert len(out.strip().splitlines()) == 5
    assert "(a,0,-a)  evenly tagged" in out


def test_invariants_laplacian_3v1e(capsys, tmp_path):
    path = digraph_file(tmp_path, '{"n":3,"edges":[[2,3]]}')
    code, out, _ = run(capsys, "invariants", path, "--matrix", "laplacian")
    assert code == 0
    assert len(out.strip().splitlines()) == 10


def test_invariants_lattice_and_orbit_flags(capsys, tmp_path):
    path = digraph_file(tmp_path, DIRICHLET_JSON)
    code, out, _ = run(capsys, "invariants", path, "--lattice", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "invariants", path, "--orbits")
    assert code == 0 and "orbits" in out.splitlines()[0]


def test_lattice_json(capsys, tmp_path):
    path = digraph_file(tmp_path, DIRICHLET_JSON)
    code, out, _ = run(capsys, "lattice", path)
    assert code == 0
    d = json.loads(out)
    assert {n["typical"] for n in d["nodes"]} >= {"(a,0,-a)", "(a,b,c)"}
    assert d["covers"]


def test_orbits_text(capsys, tmp_path):
    from fractions import Fraction as F

    from polydiag import graph

    g = graph.cayley_digraph(graph.dihedral_group_table(3), [(3, F(1)), (4, F(1))])
    path = digraph_file(tmp_path, graph.to_json(g))
    code, out, _ = run(capsys, "orbits", path)
    assert code == 0
    assert out.splitlines()[0] == "31 subspaces in 15 orbits"


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "3", "--format", "csv")
    assert code == 0
    assert "polydiagonal,1,2,6,24,ok" in out


def test_count_deterministic(capsys):
    _, out1, _ = run(capsys, "count", "4")
    _, out2, _ = run(capsys, "count", "4")
    assert out1 == out2


def test_simulate_writes_csv(capsys, tmp_path):
    path = digraph_file(tmp_path, '{"n": 2, "arrows": [[1,2,"1"],[2,2,"1"]]}')
    out_csv = tmp_path / "traj.csv"
    code, out, _ = run(
        capsys,
        "simulate",
        "--preset", "vanderpol", "--eps", "2",
        "--digraph", path, "--scale", "0.5",
        "--dt", "0.01", "--T", "0.5", "--seed", "1",
        "--output", str(out_csv),
    )
    assert code == 0
    assert json.loads(out)["status"] == "ok"
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "t,x1,x2,x3,x4"
    assert len(lines) == 52


def test_simulate_x0_validation(capsys, tmp_path):
    path = digraph_file(tmp_path, '{"n": 2, "arrows": [[1,2,"1"]]}')
    code, _, err = run(
        capsys, "simulate", "--preset", "vanderpol", "--digraph", path, "--x0", "1,2"
    )
    assert code == 2 and "--x0 needs 4 values" in err


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "conjecture53", "--n", "5", "--trials", "10", "--seed", "7")
    assert code == 0
    assert out.startswith("conjecture53: PASS")


def test_check_main_lemma_file(capsys, tmp_path):
    path = digraph_file(
        tmp_path, '{"n": 3, "arrows": [[1,1,"1"],[1,2,"1"],[2,3,"1"]]}'
    )
    code, out, _ = run(capsys, "check", "main-lemma", "--file", path, "--lambda", "0")
    assert code == 0
    d = json.loads(out)
    assert d["passed"] and len(d["rows"]) == 6


def test_check_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "nope")
    assert code == 2 and "unknown suite" in err


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "invariants", "/nonexistent.json")
    assert code == 2
