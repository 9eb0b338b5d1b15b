import json

import pytest

from tempspan import cli
from tempspan import tempgraph as tg
from tempspan.generate import random_happy_tc_with_cover


@pytest.fixture
def graph_file(tmp_path):
    g = random_happy_tc_with_cover(6, 2, 42)
    path = tmp_path / "g.tg"
    path.write_text(tg.serialize(g))
    return path


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_tc_graph(capsys, graph_file):
    code, out, _ = run(capsys, "check", graph_file)
    assert code == 0
    assert out.strip() == "tc=true simple=true proper=true happy=true"


def test_check_edgeless_not_tc(capsys, tmp_path):
    path = tmp_path / "e.tg"
    path.write_text("3 1\n0 1 1\n")
    code, out, _ = run(capsys, "check", path)
    assert code == 1
    assert "tc=false" in out


def test_check_json_schema(capsys, graph_file):
    code, out, _ = run(capsys, "check", graph_file, "--json")
    payload = json.loads(out)
    assert set(payload) == {"command", "input", "result"}
    assert set(payload["result"]) == {"tc", "simple", "proper", "happy"}
    assert set(payload["input"]) == {"path", "sha256"}


def test_solve_methods_agree(capsys, graph_file):
    code, out, _ = run(capsys, "solve", "--method", "exact", "--json", graph_file)
    assert code == 0
    exact = json.loads(out)["result"]
    code, out, _ = run(capsys, "solve", "--method", "xp-vc", "--json", graph_file)
    assert code == 0
    xp = json.loads(out)["result"]
    assert exact["size"] == xp["size"]
    assert exact["optimal"] and xp["optimal"]


def test_solve_summary_line(capsys, graph_file, tmp_path):
    out_file = tmp_path / "s.spanner"
    code, out, _ = run(capsys, "solve", "--out", out_file, graph_file)
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("size=") and "optimal=true" in first and "method=exact-" in first
    spanner = out_file.read_text()
    assert all(line.strip().isdigit() for line in spanner.splitlines())


def test_solve_budget_exit_codes(capsys, graph_file, tmp_path):
    code, out, _ = run(capsys, "solve", "--json", graph_file)
    opt = json.loads(out)["result"]["size"]
    code, _, _ = run(capsys, "solve", "--k", opt, "--out", tmp_path / "a", graph_file)
    assert code == 0
    code, _, _ = run(capsys, "solve", "--k", opt - 1, "--out", tmp_path / "b", graph_file)
    assert code == 1


def test_solve_resource_guard(capsys, graph_file):
    code, _, err = run(capsys, "solve", "--cap", 0, graph_file)
    assert code == 2
    assert "resource guard" in err


def test_verify_roundtrip(capsys, graph_file, tmp_path):
    span_file = tmp_path / "w.spanner"
    code, out, _ = run(capsys, "solve", "--out", span_file, graph_file)
    assert code == 0
    code, out, _ = run(capsys, "verify", graph_file, span_file)
    assert code == 0 and "holds=true" in out
    span_file.write_text("")  # the empty subset never satisfies the requirement
    code, out, _ = run(capsys, "verify", graph_file, span_file)
    assert code == 1 and "holds=false" in out


def test_decompose_optimal_spanner(capsys, graph_file, tmp_path):
    span_file = tmp_path / "opt.spanner"
    run(capsys, "solve", "--out", span_file, graph_file)
    code, out, _ = run(capsys, "decompose", "--vc", graph_file, span_file)
    assert code == 0
    assert out.startswith("cover=")
    assert "tree root=" in out


def test_decompose_full_graph_may_fail(capsys, graph_file, tmp_path):
    g = tg.parse(graph_file.read_text())
    span_file = tmp_path / "full.spanner"
    span_file.write_text("".join(f"{i}\n" for i in range(g.m)))
    code, out, _ = run(capsys, "decompose", "--vc", graph_file, span_file)
    assert code in (0, 1)
    if code == 1:
        assert "NOT-DECOMPOSABLE" in out


def test_gen_random_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.tg", tmp_path / "b.tg"
    assert run(capsys, "gen-random", "--n", 7, "--seed", 5, "--out", a)[0] == 0
    assert run(capsys, "gen-random", "--n", 7, "--seed", 5, "--out", b)[0] == 0
    assert a.read_text() == b.read_text()
    assert run(capsys, "gen-random", "--n", 7, "--seed", 6, "--out", b)[0] == 0
    assert a.read_text() != b.read_text()


def test_gen_random_cover_flag(capsys, tmp_path):
    path = tmp_path / "c.tg"
    code, _, _ = run(capsys, "gen-random", "--n", 8, "--seed", 1, "--cover", 2, "--out", path)
    assert code == 0
    g = tg.parse(path.read_text())
    from tempspan.solver import min_vertex_cover
    from tempspan.tempgraph import underlying_graph

    assert len(min_vertex_cover(underlying_graph(g), g.vertex_count)) <= 2


def test_reduce_sat_outputs(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    prefix = tmp_path / "out"
    code, out, _ = run(capsys, "reduce-sat", cnf, "--out-prefix", prefix)
    assert code == 0
    g = tg.parse((tmp_path / "out.tg").read_text())
    assert g.vertex_count == 14
    budget = int((tmp_path / "out.budget").read_text())
    assert budget == g.m - 9
    critical = [int(x) for x in (tmp_path / "out.critical").read_text().split()]
    assert critical and all(0 <= i < g.m for i in critical)
    roles = (tmp_path / "out.roles").read_text().splitlines()
    assert len(roles) == g.vertex_count

    code, out, _ = run(capsys, "check", tmp_path / "out.tg")
    assert code == 0 and "happy=true" in out


def test_reduce_sat_two_source(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    prefix = tmp_path / "var"
    code, _, _ = run(capsys, "reduce-sat", cnf, "--two-source", "--out-prefix", prefix)
    assert code == 0
    sources = (tmp_path / "var.sources").read_text().split()
    assert sources == ["0", "1"]
    g = tg.parse((tmp_path / "var.tg").read_text())
    assert g.vertex_count == 13


def test_reduce_mcc_outputs(capsys, tmp_path):
    lines = ["3 2"]
    for i in range(1, 4):
        for j in range(i + 1, 4):
            for a in (1, 2):
                for b in (1, 2):
                    lines.append(f"{i} {a} {j} {b}")
    mcc = tmp_path / "g.mcc"
    mcc.write_text("\n".join(lines) + "\n")
    prefix = tmp_path / "out"
    code, out, _ = run(capsys, "reduce-mcc", mcc, "--out-prefix", prefix)
    assert code == 0
    g = tg.parse((tmp_path / "out.tg").read_text())
    budget = int((tmp_path / "out.budget").read_text())
    gadgets = (tmp_path / "out.gadgets").read_text().splitlines()
    assert len(gadgets) == g.m
    fvs = [int(x) for x in (tmp_path / "out.fvs").read_text().split()]
    assert fvs
    assert budget > 0
    code, out, _ = run(capsys, "check", tmp_path / "out.tg")
    assert code == 0  # strictly TC


def test_usage_errors_exit_three(capsys, tmp_path):
    bad = tmp_path / "bad.tg"
    bad.write_text("2 1\n0 1 0\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 3
    code, _, err = run(capsys, "check", tmp_path / "missing.tg")
    assert code == 3
    code, _, _ = run(capsys, "solve", "--method", "xp-vc", "--two-source", 0, 1, bad)
    assert code == 3


def test_verify_two_source_flag(capsys, tmp_path):
    g = tg.build(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    path = tmp_path / "t.tg"
    path.write_text(tg.serialize(g))
    span = tmp_path / "t.spanner"
    span.write_text("0\n1\n")
    code, out, _ = run(capsys, "verify", path, span, "--two-source", 0, 1)
    assert code == 0
    assert "two-source(0,1)" in out
