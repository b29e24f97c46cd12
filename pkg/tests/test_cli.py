import pytest

from addcolor.cli import main
from addcolor.graph import Graph
from addcolor.graph6 import write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_family_cycle5(capsys):
    code, out, _ = run(capsys, "family", "cycle:5")
    assert code == 0
    assert "eta = 3" in out
    assert "1:2 2:1 3:3 4:1 5:1" in out
    assert "OK" in out
    assert "bounds: 2 <= eta <= 3" in out


def test_family_complete_sun(capsys):
    code, out, _ = run(capsys, "family", "complete-sun:7")
    assert code == 0
    assert "eta = 3" in out


def test_family_multipartite_solver_certified(capsys):
    code, out, _ = run(capsys, "family", "multipartite:2,2,1")
    assert code == 0
    assert "eta = 2" in out
    assert "solver" in out


def test_family_bad_spec(capsys):
    code, _, err = run(capsys, "family", "fan:1")
    assert code == 1
    assert "error" in err


def test_solve_k3(capsys):
    code, out, _ = run(capsys, "solve", "Bw")
    assert code == 0
    assert "eta = 3" in out


def test_solve_k2(capsys):
    code, out, _ = run(capsys, "solve", "A_")
    assert code == 0
    assert "eta = 2" in out


def test_solve_two_components_reports_max(capsys):
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    code, out, _ = run(capsys, "solve", write_graph6(g))
    assert code == 0
    assert "components=2" in out
    assert "eta = 3" in out


def test_solve_edge_list_file(tmp_path, capsys):
    path = tmp_path / "triangle.edges"
    path.write_text("# a triangle\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert "eta = 3" in out


def test_solve_edge_list_with_header(tmp_path, capsys):
    path = tmp_path / "edge_plus_isolated.edges"
    path.write_text("4\n0 1\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert "components=3" in out
    assert "eta = 2" in out


def test_solve_parse_failure(capsys):
    code, _, err = run(capsys, "solve", ":bad")
    assert code == 1 and "error" in err


def test_solve_budget_exhausted(capsys):
    code, out, _ = run(capsys, "solve", "Dhc", "--budget", "2")
    assert code == 3
    assert "budget exceeded" in out


def test_export_lp_k2(tmp_path, capsys):
    out_path = tmp_path / "k2.lp"
    code, out, _ = run(capsys, "export-lp", "A_", "-o", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert "c_z_0_1: f_v1 - f_v0 + 2 z_0_1 <= 1" in text
    assert "integer=3 binary=2" in out


def test_export_lp_c5_symmetry_noop(tmp_path, capsys):
    base = tmp_path / "c5.lp"
    sym = tmp_path / "c5s.lp"
    _, out_base, _ = run(capsys, "export-lp", "Dhc", "-o", str(base))
    _, out_sym, _ = run(capsys, "export-lp", "Dhc", "--symmetry", "-o", str(sym))
    assert base.read_text() == sym.read_text()  # C_5 is twin-free


def test_export_lp_k4_symmetry_eliminates(tmp_path, capsys):
    path = tmp_path / "k4.lp"
    code, out, _ = run(capsys, "export-lp", "C~", "--symmetry", "-o", str(path))
    assert code == 0
    assert "binary=6" in out and "eliminated=6" in out


def test_export_lp_components(tmp_path, capsys):
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    out_path = tmp_path / "two.lp"
    code, out, _ = run(capsys, "export-lp", write_graph6(g), "-o", str(out_path))
    assert code == 0
    assert (tmp_path / "two_c1.lp").exists()
    assert (tmp_path / "two_c2.lp").exists()


def test_export_lp_edgeless_component_skipped(tmp_path, capsys):
    g = Graph.from_edges(3, [(0, 1)])
    out_path = tmp_path / "mixed.lp"
    code, out, _ = run(capsys, "export-lp", write_graph6(g), "-o", str(out_path))
    assert code == 0
    assert "skipped" in out
    assert (tmp_path / "mixed_c1.lp").exists()
    assert not (tmp_path / "mixed_c2.lp").exists()


def test_sweep_single_graph(tmp_path, capsys):
    corpus = tmp_path / "one.g6"
    corpus.write_text("Bw\n")
    report = tmp_path / "report.txt"
    code, out, _ = run(capsys, "sweep", str(corpus), "-o", str(report))
    assert code == 0
    text = report.read_text()
    assert "Bw\t3\t3\t3\t3" in text
    assert "holds" in text
    assert "# holds: 1 violations: 0" in text


def test_sweep_corrupt_line_isolated(tmp_path, capsys):
    corpus = tmp_path / "mixed.g6"
    corpus.write_text("Bw\n:corrupt\nA_\n")
    report = tmp_path / "report.txt"
    code, _, _ = run(capsys, "sweep", str(corpus), "-o", str(report))
    assert code == 0
    text = report.read_text()
    assert "parse-error" in text
    assert "# holds: 2 violations: 0" in text
    assert "parse_errors: 1" in text


def test_sweep_budget_exit_code(tmp_path, capsys):
    corpus = tmp_path / "c5.g6"
    corpus.write_text("Dhc\n")
    code, out, _ = run(capsys, "sweep", str(corpus), "--budget", "2")
    assert code == 3
    assert "budget-exceeded" in out


def test_violation_record_carries_both_certificates():
    # serializer contract for the (never yet observed) violation case
    from addcolor.cli import _record_line

    record = {
        "g6": "Bw", "n": 3, "m": 3, "eta": 4, "chi": 3,
        "eta_source": "solver", "chi_source": "exact", "status": "VIOLATION",
        "eta_cert": "1,2,3", "chi_cert": "1,2,3",
    }
    line = _record_line(record)
    assert "VIOLATION" in line
    assert "eta_cert=1,2,3" in line and "chi_cert=1,2,3" in line


def test_sweep_chi_limit_reports_dsatur_only(tmp_path, capsys):
    corpus = tmp_path / "k3.g6"
    corpus.write_text("Bw\n")
    code, out, _ = run(capsys, "sweep", str(corpus), "--chi-limit", "2")
    assert code == 3
    assert "dsatur-only" in out and "budget-exceeded" in out


def test_sweep_max_n_filter(tmp_path, capsys):
    corpus = tmp_path / "two.g6"
    corpus.write_text("Bw\nDhc\n")
    code, out, _ = run(capsys, "sweep", str(corpus), "--max-n", "3")
    assert code == 0
    assert "skipped_over_max_n: 1" in out


def test_sweep_worker_determinism(tmp_path, capsys, all_n6_corpus_path):
    r1 = tmp_path / "w1.txt"
    r2 = tmp_path / "w2.txt"
    assert run(capsys, "sweep", str(all_n6_corpus_path), "-o", str(r1))[0] == 0
    assert run(capsys, "sweep", str(all_n6_corpus_path), "--workers", "4", "-o", str(r2))[0] == 0

    def stable(path):
        return [ln for ln in path.read_text().splitlines() if not ln.startswith("# elapsed")]

    assert stable(r1) == stable(r2)
