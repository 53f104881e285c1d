import pytest

from conftest import complete_graph, cycle_graph, path_graph

from zcoloring import Coloring, parse_coloring_record, parse_dimacs, serialize_coloring, to_dimacs
from zcoloring.cli import main


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.col"
    path.write_text(to_dimacs(path_graph(5)))
    return str(path)


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.col"
    path.write_text(to_dimacs(complete_graph(5)))
    return str(path)


def test_color_z_on_p5(p5_file, tmp_path, capsys):
    out = tmp_path / "p5.rec"
    assert main(["color", p5_file, "--heuristic", "z", "--out", str(out)]) == 0
    cg = parse_coloring_record(out.read_text())
    assert cg.coloring.k <= 3
    summary = capsys.readouterr().out
    assert "z=ok" in summary and "k=" in summary


def test_color_greedy_on_k5(k5_file, capsys):
    assert main(["color", k5_file, "--heuristic", "greedy"]) == 0
    assert "k=5" in capsys.readouterr().out


def test_color_record_format_round_trips(p5_file, capsys):
    assert main(["color", p5_file, "--heuristic", "gcd", "--format", "record"]) == 0
    record = capsys.readouterr().out
    cg = parse_coloring_record(record)
    assert cg.graph == path_graph(5)


def test_color_determinism(p5_file, tmp_path, capsys):
    out1, out2 = tmp_path / "a.rec", tmp_path / "b.rec"
    main(["color", p5_file, "--heuristic", "iz", "--rounds", "5", "--seed", "9", "--out", str(out1)])
    main(["color", p5_file, "--heuristic", "iz", "--rounds", "5", "--seed", "9", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_color_budget_runs_complementary_pass(tmp_path, capsys):
    import random

    from zcoloring.randgraphs import gnp

    g = gnp(14, 0.45, random.Random(2))
    path = tmp_path / "g.col"
    path.write_text(to_dimacs(g))
    assert main(["color", str(path), "--heuristic", "z", "--budget", "200", "--seed", "3",
                 "--format", "record"]) == 0
    with_budget = parse_coloring_record(capsys.readouterr().out)
    assert main(["color", str(path), "--heuristic", "z", "--format", "record"]) == 0
    plain = parse_coloring_record(capsys.readouterr().out)
    assert with_budget.coloring.k <= plain.coloring.k


def test_verify_c6_z_level(tmp_path):
    graph = tmp_path / "c6.col"
    graph.write_text(to_dimacs(cycle_graph(6)))
    rec = tmp_path / "c6.rec"
    rec.write_text(serialize_coloring(cycle_graph(6), Coloring((3, 2, 1, 3, 2, 1))))
    assert main(["verify", str(graph), str(rec), "--level", "z"]) == 0


def test_verify_monochromatic_edge_fails(tmp_path, capsys):
    graph = tmp_path / "k2.col"
    graph.write_text(to_dimacs(complete_graph(2)))
    rec = tmp_path / "k2.rec"
    rec.write_text(serialize_coloring(complete_graph(2), Coloring((1, 1))))
    assert main(["verify", str(graph), str(rec), "--level", "proper"]) == 1
    assert "monochromatic-edge" in capsys.readouterr().out


def test_verify_z_level_recomputes_without_stored_star(tmp_path):
    p4 = path_graph(4)
    graph = tmp_path / "p4.col"
    graph.write_text(to_dimacs(p4))
    rec = tmp_path / "p4.rec"
    rec.write_text(serialize_coloring(p4, Coloring((1, 2, 3, 1))))  # Grundy, not z
    assert main(["verify", str(graph), str(rec), "--level", "grundy"]) == 0
    assert main(["verify", str(graph), str(rec), "--level", "z"]) == 1


def test_verify_wrong_graph_is_usage_error(tmp_path):
    graph = tmp_path / "k2.col"
    graph.write_text(to_dimacs(complete_graph(2)))
    rec = tmp_path / "p3.rec"
    rec.write_text(serialize_coloring(path_graph(3), Coloring((1, 2, 1))))
    assert main(["verify", str(graph), str(rec)]) == 2


def test_exact_z_p5(p5_file, capsys):
    assert main(["exact", p5_file, "--param", "z"]) == 0
    assert "= 3" in capsys.readouterr().out


def test_exact_record_round_trips(p5_file, capsys):
    assert main(["exact", p5_file, "--param", "chi", "--format", "record"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("param chi\nvalue 2\n")
    parse_coloring_record(out.split("value 2\n", 1)[1])


def test_exact_size_limit(tmp_path, capsys):
    big = tmp_path / "big.col"
    big.write_text("p edge 20 0\n")
    assert main(["exact", str(big), "--param", "z"]) == 2
    assert main(["exact", str(big), "--param", "z", "--limit", "20"]) == 0


def test_atoms_gen_and_bound(tmp_path, capsys):
    catalog = tmp_path / "d3.catalog"
    assert main(["atoms", "gen", "--t", "3", "--out", str(catalog)]) == 0
    star = tmp_path / "k15.col"
    star.write_text("p edge 6 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\n")
    assert main(["atoms", "bound", str(star), "--t", "3", "--catalog", str(catalog)]) == 0
    assert "<= 2" in capsys.readouterr().out
    tri = tmp_path / "k3.col"
    tri.write_text(to_dimacs(complete_graph(3)))
    assert main(["atoms", "bound", str(tri), "--t", "3", "--catalog", str(catalog)]) == 1
    assert "inconclusive" in capsys.readouterr().out


def test_family_gen_all_names(tmp_path):
    for name, k in (("Ht", 3), ("Ft", 4), ("Gt", 4), ("Rk", 4), ("Tk", 4)):
        out = tmp_path / f"{name}.col"
        assert main(["family", "gen", "--name", name, "--k", str(k), "--out", str(out)]) == 0
        parse_dimacs(out.read_text())


def test_family_gen_rk_coloring_record(tmp_path):
    out = tmp_path / "r3.col"
    rec = tmp_path / "r3.rec"
    assert main(["family", "gen", "--name", "Rk", "--k", "3",
                 "--out", str(out), "--coloring-out", str(rec)]) == 0
    cg = parse_coloring_record(rec.read_text())
    assert cg.coloring.k == 3 and cg.dominating_star is not None


def test_family_gen_coloring_without_one_is_error(tmp_path):
    assert main(["family", "gen", "--name", "Ht", "--k", "3",
                 "--out", str(tmp_path / "h.col"), "--coloring-out", str(tmp_path / "h.rec")]) == 2


def test_bench_table_and_monotone_columns(tmp_path, capsys):
    g4 = tmp_path / "g4.col"
    from zcoloring import gen_Gt

    g4.write_text(to_dimacs(gen_Gt(4)))
    assert main(["bench", str(g4), "--heuristics", "greedy,z", "--format", "record"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()]
    counts = {row[1]: int(row[2]) for row in rows}
    assert counts["z"] <= counts["greedy"]


def test_bench_random_and_iz(capsys):
    assert main(["bench", "--random", "30,0.5,7", "--heuristics", "z,iz",
                 "--rounds", "10", "--seed", "7", "--format", "record"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()]
    counts = {row[1]: int(row[2]) for row in rows}
    assert counts["iz"] <= counts["z"]


def test_bench_empty_instance_list(capsys):
    assert main(["bench", "--heuristics", "greedy"]) == 0


def test_bench_record_determinism(capsys):
    main(["bench", "--random", "16,0.4,3", "--heuristics", "greedy,grundy,gcd,z,iz",
          "--seed", "5", "--format", "record"])
    first = capsys.readouterr().out
    main(["bench", "--random", "16,0.4,3", "--heuristics", "greedy,grundy,gcd,z,iz",
          "--seed", "5", "--format", "record"])
    assert capsys.readouterr().out == first


def test_parse_failure_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 7\n")
    assert main(["color", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_exit_code():
    assert main(["color", "/nonexistent.col"]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["color"])
    assert err.value.code == 2
