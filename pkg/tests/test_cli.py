import subprocess
import sys

import pytest

from hyperpart import io
from hyperpart.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestEvaluate:
    def test_metrics_agree_for_two_parts(self, files, capsys):
        h = files("a.hgr", "3 4\n1 2 3\n3 4\n1 4\n")
        p = files("a.part", "1\n1\n2\n2\n")
        code, out = run(capsys, "evaluate", h, p)
        assert code == 0
        assert "cost=2 metric=conn" in out and "cost_cutnet=2" in out

    def test_hierarchical(self, files, capsys):
        h = files("b.hgr", "1 4\n1 2 3 4\n")
        p = files("b.part", "1\n2\n3\n4\n")
        t = files("b.topo", "2 2\n4 1\n")
        code, out = run(capsys, "evaluate", h, p, "--topology", t)
        assert code == 0 and "hierarchical_cost=6" in out

    def test_monochromatic(self, files, capsys):
        h = files("c.hgr", "2 3\n1 2\n2 3\n")
        p = files("c.part", "2\n2\n2\n")
        assert "cost=0" in run(capsys, "evaluate", h, p)[1]

    def test_parse_error_exit(self, files, capsys):
        h = files("bad.hgr", "2 3\n1 2\n1 9\n")
        p = files("bad.part", "1\n1\n1\n")
        code = main(["evaluate", h, p])
        assert code == 3
        assert "bad.hgr:3" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["evaluate", str(tmp_path / "nope.hgr"), str(tmp_path / "nope.part")]) == 3

    def test_size_mismatch(self, files, capsys):
        h = files("d.hgr", "1 3\n1 2\n")
        p = files("d.part", "1\n2\n")
        assert main(["evaluate", h, p]) == 3


class TestSolve:
    def test_writes_partition(self, files, capsys, tmp_path):
        h = files("s.hgr", "2 4\n1 2\n3 4\n")
        code, out = run(capsys, "solve", h, "--k", "2")
        assert code == 0 and "cost=0" in out
        p = io.load_partition(h + ".part.2", 4, 2)
        assert p.assign[0] == p.assign[1] != p.assign[2] == p.assign[3]

    def test_bounded_infeasible(self, files, capsys):
        h = files("t.hgr", "1 2\n1 2\n")
        assert run(capsys, "solve", h, "--k", "2", "--mode", "bounded", "--budget", "0")[0] == 1

    def test_usage_error(self, files, capsys):
        h = files("u.hgr", "1 2\n1 2\n")
        assert main(["solve", h]) == 2
        assert main(["solve", h, "--k", "2", "--bogus"]) == 2

    def test_bad_parameter(self, files, capsys):
        h = files("v.hgr", "1 2\n1 2\n")
        assert main(["solve", h, "--k", "0"]) == 2
        assert main(["solve", h, "--k", "2", "--eps", "-1/2"]) == 2

    def test_budget_exit(self, tmp_path, capsys):
        prefix = str(tmp_path / "hard")
        main(["generate", "--gadget", "scheduling", "--params", "numbers=3,3,3,5,5,5", "b=12",
              "--out", prefix])
        code = main(["schedule", "--dag", prefix + ".dag", "--k", "2",
                     "--partition", prefix + ".part", "--budget", "50"])
        assert code == 4

    def test_recursive(self, files, capsys):
        h = files("r.hgr", "2 8\n1 2 3 4\n5 6 7 8\n")
        code, out = run(capsys, "solve", h, "--k", "4", "--mode", "recursive", "--branching", "2,2")
        assert code == 0


class TestRecognizeConvert:
    def test_triangle(self, files, capsys):
        h = files("tri.hgr", "3 3\n1 2\n2 3\n1 3\n")
        code, out = run(capsys, "recognize", h)
        assert code == 1 and out.splitlines()[:2] == ["no", "violating=1 2 3"]

    def test_round_trip(self, files, capsys, tmp_path):
        d = files("c.dag", "4 4\n1 2\n1 3\n2 4\n3 4\n")
        prefix = str(tmp_path / "conv")
        assert run(capsys, "convert", d, "--out", prefix)[0] == 0
        h = io.load_hgr(prefix + ".hgr")
        assert h.m == 3
        code, out = run(capsys, "recognize", prefix + ".hgr", "--witness", str(tmp_path / "w"))
        assert code == 0 and out.startswith("yes")
        assert io.load_dag(str(tmp_path / "w") + ".dag").n == 4

    def test_chain(self, files, capsys, tmp_path):
        d = files("chain.dag", "3 2\n1 2\n2 3\n")
        prefix = str(tmp_path / "ch")
        run(capsys, "convert", d, "--out", prefix)
        assert io.load_hgr(prefix + ".hgr").m == 2
        assert io.parse_generators(open(prefix + ".gen").read()) == [0, 1]


class TestLayerScheduleAssign:
    def test_layer(self, files, capsys):
        d = files("l.dag", "4 3\n1 2\n2 3\n1 4\n")
        code, out = run(capsys, "layer", d, "--enumerate")
        assert code == 0 and "layerings=2" in out

    def test_schedule(self, files, capsys):
        d = files("s.dag", "4 4\n1 2\n1 3\n2 4\n3 4\n")
        code, out = run(capsys, "schedule", "--dag", d, "--k", "2")
        assert code == 0 and "mu=3" in out

    def test_schedule_partition(self, files, capsys):
        d = files("p.dag", "4 0\n")
        p = files("p.part", "1\n1\n1\n1\n")
        code, out = run(capsys, "schedule", "--dag", d, "--k", "2", "--partition", p)
        assert code == 1 and "mu_p=4" in out

    def test_assign_matching(self, files, capsys):
        h = files("a.hgr", "3 4 1\n5 1 2\n5 3 4\n1 1 3\n")
        p = files("a.part", "1\n2\n3\n4\n")
        t = files("a.topo", "2 2\n4 1\n")
        code, out = run(capsys, "assign", h, "--topology", t, "--partition", p, "--method", "matching")
        assert code == 0 and "cost=14" in out and "leaf_of=1 2 3 4" in out


class TestGenerateVerify:
    @pytest.mark.parametrize("gadget,params", [
        ("block", ["b=4"]), ("grid", ["ell=3", "ell0=2"]), ("enforce", ["size=3", "h=1", "mode=exact"]),
        ("fixed-blocks", ["m0=3"]), ("spes", ["graph=path:3", "p=1"]),
        ("ovp", ["vectors=10,01"]), ("coloring", ["graph=complete:3"]),
        ("recursive", ["n=24"]), ("twostep", []), ("densest-hyperdag", ["m=5"]),
        ("scheduling", ["numbers=3,4,5", "b=12"]),
    ])
    def test_generate_then_verify(self, gadget, params, tmp_path, capsys):
        prefix = str(tmp_path / gadget)
        assert main(["generate", "--gadget", gadget, "--params", *params, "--out", prefix]) == 0
        assert io.parse_meta(open(prefix + ".meta").read())["gadget"] == gadget
        code, out = run(capsys, "verify", "--instance", prefix)
        assert code == 0, out

    def test_unknown_gadget(self, tmp_path):
        assert main(["generate", "--gadget", "nope", "--out", str(tmp_path / "x")]) == 2

    def test_suite_with_knobs(self, capsys):
        code, out = run(capsys, "verify", "grid", "--lmax", "3")
        assert code == 0 and "PASS" in out

    def test_solver_oracle_small(self, capsys):
        code, out = run(capsys, "verify", "solver-oracle", "--n", "6", "--trials", "20", "--seed", "7")
        assert code == 0 and "PASS" in out

    def test_unknown_suite(self, capsys):
        assert main(["verify", "nonsense"]) == 2

    def test_unknown_knob(self, capsys):
        assert main(["verify", "grid", "--bogus", "1"]) == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "hyperpart.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "verify" in out.stdout
