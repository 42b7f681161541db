import pytest

from genconn.cli import main
from genconn.io import parse_graph_and_set

P3 = "graph 3 2\ne 0 1\ne 1 2\n"
K4 = "graph 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n"


@pytest.fixture
def p3(tmp_path):
    f = tmp_path / "p3.graph"
    f.write_text(P3)
    return str(f)


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.graph"
    f.write_text(K4)
    return str(f)


class TestSolve:
    def test_kappa_k(self, k4, capsys):
        assert main(["solve", "kappa-k", "-g", k4, "-k", "2"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_lambda_set(self, p3, capsys):
        assert main(["solve", "lambda-set", "-g", p3, "-S", "0,2"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_decide_no(self, p3, capsys):
        assert main(["solve", "kappa-set", "-g", p3, "-S", "0,2", "--decide", "2"]) == 0
        assert capsys.readouterr().out == "no\n"

    def test_decide_yes(self, k4, capsys):
        assert main(["solve", "lambda-set", "-g", k4, "-S", "0,1", "--decide", "3"]) == 0
        assert capsys.readouterr().out == "yes\n"

    def test_witness(self, p3, capsys):
        assert main(["solve", "kappa-set", "-g", p3, "-S", "0,2", "--witness"]) == 0
        out = capsys.readouterr().out
        assert out == "1\ntree: e 0 1 ; e 1 2\n"

    def test_classical(self, k4, capsys):
        assert main(["solve", "kappa", "-g", k4]) == 0
        assert main(["solve", "lambda", "-g", k4]) == 0
        assert capsys.readouterr().out == "3\n3\n"

    def test_missing_set_is_usage_error(self, p3, capsys):
        assert main(["solve", "kappa-set", "-g", p3]) == 2
        assert "requires -S" in capsys.readouterr().err

    def test_set_from_file(self, tmp_path, capsys):
        f = tmp_path / "with_set.graph"
        f.write_text(P3 + "set 2 0 2\n")
        assert main(["solve", "lambda-set", "-g", str(f)]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_guard_exit_code(self, tmp_path, capsys):
        edges = "".join(f"e {i} {i+1}\n" for i in range(17))
        f = tmp_path / "big.graph"
        f.write_text(f"graph 18 17\n{edges}")
        assert main(["solve", "kappa-k", "-g", str(f), "-k", "2"]) == 3
        assert main(["solve", "kappa-k", "-g", str(f), "-k", "2", "--force"]) == 0

    def test_guard_env_override(self, tmp_path, capsys, monkeypatch):
        edges = "".join(f"e {i} {i+1}\n" for i in range(17))
        f = tmp_path / "big.graph"
        f.write_text(f"graph 18 17\n{edges}")
        monkeypatch.setenv("GENCONN_FORCE", "1")
        assert main(["solve", "kappa-k", "-g", str(f), "-k", "2"]) == 0

    def test_parse_error_exit_code(self, tmp_path, capsys):
        f = tmp_path / "bad.graph"
        f.write_text("graph 2 1\ne 0 0\n")
        assert main(["solve", "kappa", "-g", str(f)]) == 2
        assert "self-loop" in capsys.readouterr().err


class TestReduce:
    def test_3dm_p1_summary(self, tmp_path, capsys):
        inp = tmp_path / "a.3dm"
        inp.write_text("3dm 1 1\nt 0 0 0\n")
        out = tmp_path / "a.graph"
        assert main(["reduce", "3dm-p1", "-i", str(inp), "-o", str(out)]) == 0
        assert capsys.readouterr().out == "V=21 E=26 q=7\n"
        g, _ = parse_graph_and_set(out.read_text())
        assert g.n == 21 and g.m == 26 and g.part_tag is not None

    def test_linegraph_summary(self, p3, tmp_path, capsys):
        out = tmp_path / "out.graph"
        assert main(
            ["reduce", "linegraph", "-g", p3, "-S", "0,2", "-o", str(out)]
        ) == 0
        assert capsys.readouterr().out == "V=5 E=5 l=-\n"
        g, s = parse_graph_and_set(out.read_text())
        assert (g.n, g.m, s) == (5, 5, (0, 2))

    def test_expand_l_threshold_too_small(self, p3, tmp_path, capsys):
        out = tmp_path / "out.graph"
        assert main(
            ["reduce", "expand-l", "-g", p3, "-S", "0,2", "--l", "2", "-o", str(out)]
        ) == 2

    def test_expand_l(self, p3, tmp_path, capsys):
        out = tmp_path / "out.graph"
        assert main(
            ["reduce", "expand-l", "-g", p3, "-S", "0,2", "--l", "3", "-o", str(out)]
        ) == 0
        assert capsys.readouterr().out == "V=10 E=12 l=3\n"

    def test_expand_k(self, k4, tmp_path, capsys):
        out = tmp_path / "out.graph"
        assert main(
            ["reduce", "expand-k", "-g", k4, "-S", "0,1,2", "--k", "4", "--l", "2",
             "-o", str(out)]
        ) == 0
        assert capsys.readouterr().out == "V=7 E=10 l=2\n"
        g, s = parse_graph_and_set(out.read_text())
        assert len(s) == 4

    def test_3sat_lambda2(self, tmp_path, capsys):
        inp = tmp_path / "f.cnf"
        inp.write_text("p cnf 1 1\n1 1 1 0\n")
        out = tmp_path / "f.graph"
        assert main(["reduce", "3sat-lambda2", "-i", str(inp), "-o", str(out)]) == 0
        assert capsys.readouterr().out == "V=7 E=8 l=2\n"

    def test_p1_kappa(self, tmp_path, capsys):
        inp = tmp_path / "tri.graph"
        inp.write_text("graph 3 3\ne 0 1\ne 0 2\ne 1 2\nparts 0 1 2\n")
        out = tmp_path / "tri_k.graph"
        assert main(["reduce", "p1-kappa", "-i", str(inp), "-o", str(out)]) == 0
        assert capsys.readouterr().out == "V=6 E=6 q=1\n"

    def test_reduce_then_solve_pipeline(self, p3, tmp_path, capsys):
        out = tmp_path / "out.graph"
        main(["reduce", "linegraph", "-g", p3, "-S", "0,2", "-o", str(out)])
        capsys.readouterr()
        assert main(["solve", "kappa-set", "-g", str(out)]) == 0
        assert capsys.readouterr().out == "1\n"


class TestVerifyCommand:
    def test_unknown_reduction(self, capsys):
        assert main(["verify", "--reduction", "R9"]) == 2
        assert "unknown reduction" in capsys.readouterr().err

    def test_r4_passes(self, tmp_path, capsys):
        out = tmp_path / "report.txt"
        code = main(["verify", "--reduction", "R4", "--max-n", "3", "--out", str(out)])
        assert code == 0
        stdout = capsys.readouterr().out
        assert stdout.startswith("PASS R4 ")
        text = out.read_text()
        assert "reduction: R4" in text and "failures: 0" in text

    def test_r5_fails_honestly(self, capsys):
        # known construction defect on degenerate formulas: exit code 1
        assert main(["verify", "--reduction", "R5"]) == 1
        assert capsys.readouterr().out.startswith("FAIL R5 ")

    def test_stdout_is_deterministic(self, capsys):
        main(["verify", "--reduction", "R1"])
        first = capsys.readouterr().out
        main(["verify", "--reduction", "R1"])
        second = capsys.readouterr().out
        assert first == second == "PASS R1 95 0\n"
