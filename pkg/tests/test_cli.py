import csv
import io
import json
from pathlib import Path

import pytest

from malkit.cli import AGE_RULES, CSV_FIELDS, bench_rows, main
from malkit.graph import parse_graph, read_graph, star_graph, write_graph
from malkit.temporal import read_labeling

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def star4(tmp_cwd):
    write_graph(star_graph(4), "star4.graph")
    return "star4.graph"


def test_solve_exact_star(capsys, star4):
    code, out, _ = run(capsys, "solve", star4, "--age", "3", "--algo", "exact")
    report = json.loads(out)
    assert code == 0 and report["labelCount"] == 5 and report["feasible"]
    assert report["optimalityFlag"] == "exact" and report["ageBudget"] == 3
    assert set(report) == {"algorithm", "labelCount", "lifetime", "ageBudget", "feasible",
                           "optimalityFlag", "wallTimeMs"}
    assert read_labeling("star4.labeling").total == 5


def test_verify_five_label_star_schedule(capsys, star4):
    Path("sched.labeling").write_text(
        '{"age": 3, "edges": [\n  {"u": 0, "v": 1, "labels": [1, 3]},\n'
        '  {"u": 0, "v": 2, "labels": [2]},\n  {"u": 0, "v": 3, "labels": [1, 3]}\n]}\n')
    code, out, _ = run(capsys, "verify", star4, "sched.labeling", "--age", "3")
    assert code == 0 and json.loads(out)["connected"]
    code, out, _ = run(capsys, "verify", star4, "sched.labeling", "--age", "2")
    assert code == 1 and not json.loads(out)["connected"]


def test_age_below_diameter_exits_3(capsys, star4):
    for algo in ("folklore-2r", "exact", "three-half"):
        code, _, err = run(capsys, "solve", star4, "--age", "1", "--algo", algo)
        assert code == 3 and "diameter" in err


def test_solve_reports_infeasible_lifetime(capsys, tmp_cwd):
    Path("c7.graph").write_text("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n")
    code, out, _ = run(capsys, "solve", "c7.graph", "--age", "3", "--algo", "folklore-2r")
    assert code == 3 and json.loads(out)["feasible"] is False
    assert not Path("c7.labeling").exists()


def test_every_algorithm_runs(capsys, tmp_cwd):
    code, _, _ = run(capsys, "gen", "random-connected", "9", "14", "3", "-o", "g.graph")
    assert code == 0
    code, out, _ = run(capsys, "stats", "g.graph")
    stats = json.loads(out)
    a = 2 * stats["D"] + 2
    for algo in ("trivial", "folklore-2r", "folklore-2r1", "large-age", "three-half",
                 "five-thirds", "via-dcss:tree", "via-dcss:plus2", "via-dcss:exact"):
        code, out, _ = run(capsys, "solve", "g.graph", "--age", str(a), "--algo", algo,
                           "-o", f"{algo}.labeling")
        assert code == 0, algo
        rep = json.loads(out)
        assert rep["feasible"] and rep["lifetime"] <= a
        code, _, _ = run(capsys, "verify", "g.graph", f"{algo}.labeling", "--age", str(a))
        assert code == 0


def test_budget_exit_4(capsys, tmp_cwd):
    run(capsys, "gen", "random-connected", "12", "40", "1", "-o", "g.graph")
    code, _, err = run(capsys, "solve", "g.graph", "--age", "6", "--algo", "exact")
    assert code == 4 and "exceeds" in err


def test_parse_errors_exit_2(capsys, tmp_cwd):
    Path("bad.graph").write_text("3 2\n0 1\n")
    assert run(capsys, "stats", "bad.graph")[0] == 2
    assert run(capsys, "stats", "missing.graph")[0] == 2
    assert run(capsys, "solve", "bad.graph", "--age", "2")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "gen", "star")[0] == 2
    write_graph(star_graph(3), "s.graph")
    assert run(capsys, "solve", "s.graph", "--age", "2", "--algo", "nope")[0] == 2
    Path("l.labeling").write_text('{"edges": [{"u": 1, "v": 2, "labels": [1]}]}')
    assert run(capsys, "verify", "s.graph", "l.labeling")[0] == 2


def test_stats(capsys, star4):
    code, out, _ = run(capsys, "stats", star4)
    assert json.loads(out) == {"n": 4, "m": 3, "directed": False, "connected": True,
                               "D": 2, "R": 1, "c4": False}


def test_gen_reductions_with_roles(capsys, tmp_cwd):
    Path("sc.json").write_text('{"universeSize": 2, "sets": [[0], [1], [0, 1]]}')
    assert run(capsys, "gen", "sc-mal", "sc.json", "-o", "mal.graph")[0] == 0
    g = read_graph("mal.graph")
    roles = json.loads(Path("mal.graph.roles.json").read_text())
    assert g.n == 14 and len(roles["roles"]) == 14
    assert run(capsys, "gen", "sc-dcss", "sc.json", "5", "-o", "d.graph")[0] == 0
    assert json.loads(Path("d.graph.roles.json").read_text())["params"]["d"] == 5
    assert run(capsys, "gen", "sc-dcss", "sc.json", "4")[0] == 2
    Path("mr.json").write_text('{"groupsA": [[0]], "groupsB": [[1]], "edges": [[0, 1]]}')
    code, out, _ = run(capsys, "gen", "minrep-dcss", "mr.json", "--roles", "r.json")
    assert code == 0 and parse_graph(out).n > 0 and Path("r.json").exists()


def test_gen_is_deterministic(capsys, tmp_cwd):
    _, a, _ = run(capsys, "gen", "random-connected", "30", "50", "7")
    _, b, _ = run(capsys, "gen", "random-connected", "30", "50", "7")
    assert a == b and "seed=7" in a


def test_convert_roundtrip(capsys, star4):
    code, out, _ = run(capsys, "convert", "dcss-to-mal", star4, star4, "2", "-o", "full.labeling")
    assert code == 0 and read_labeling("full.labeling").total == 6
    code, out, _ = run(capsys, "convert", "mal-to-dcss", star4, "full.labeling")
    assert code == 0 and parse_graph(out) == star_graph(4)
    code, out, _ = run(capsys, "convert", "bidirect", star4)
    assert parse_graph(out).m == 6 and parse_graph(out).directed
    assert run(capsys, "convert", "dcss-to-mal", star4, star4, "1")[0] == 3


@pytest.mark.parametrize("rule", ["D", "3halfD", "2R1"])
def test_bench_matches_golden(rule):
    golden = list(csv.DictReader(io.StringIO((DATA / f"bench_{rule}.csv").read_text())))
    rows = list(bench_rows(str(DATA / "bench"), rule))
    assert len(rows) == len(golden)
    for got, want in zip(rows, golden):
        got = {k: ("" if v == "" else str(v)) for k, v in got.items()}
        assert {k: got[k] for k in CSV_FIELDS if k != "ms"} == \
               {k: want[k] for k in CSV_FIELDS if k != "ms"}


def test_bench_rows_feasible_means_within_age():
    for rule, fn in AGE_RULES.items():
        for row in bench_rows(str(DATA / "bench"), rule):
            if row["feasible"]:
                assert row["lifetime"] <= fn(row["D"], row["R"])


def test_bench_cli_writes_header(capsys, tmp_cwd):
    code, out, _ = run(capsys, "bench", str(DATA / "bench"), "--age-rule", "2R",
                       "--algo", "folklore-2r")
    lines = out.splitlines()
    assert code == 0 and lines[0] == ",".join(CSV_FIELDS)
    assert all(line.split(",")[8] == "True" for line in lines[1:])
