import json

from rvmis.checks import check_instance
from rvmis.cli import main
from rvmis.errors import InvariantBreach
from rvmis.generators import petersen
from rvmis.io import read_dimacs


def test_gen_and_solve(tmp_path, capsys):
    f = tmp_path / "c7.dimacs"
    assert main(["gen", "cycle", "-p", "n=7", "-o", str(f)]) == 0
    assert read_dimacs(f.read_text()).graph.n == 7
    assert main(["solve", str(f), "--algo", "avg2", "--rho", "7/3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["weight"] == "3" and out["oracle"] == "3"
    assert main(["solve", str(f), "--algo", "plg", "--variant", "G3_avg2", "--seed", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["seed"] == 5 and len(out["set"]) == 3


def test_solve_errors(tmp_path):
    f = tmp_path / "bad.dimacs"
    f.write_text("e 1 2\n")
    assert main(["solve", str(f), "--algo", "greedy"]) == 1
    f.write_text("p edge 2 1\ne 1 2\n")
    assert main(["solve", str(f), "--algo", "nope"]) == 1


def test_verify(tmp_path, capsys):
    for fam, params in [("petersen", []), ("cycle", ["-p", "n=9"]), ("rvlp_tight", ["-p", "k=3"])]:
        assert main(["gen", fam, *params, "-o", str(tmp_path / f"{fam}.dimacs")]) == 0
    assert main(["verify", str(tmp_path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and all(line.startswith("ok") for line in lines)


def test_verify_reports_breach(tmp_path, monkeypatch):
    (tmp_path / "p.dimacs").write_text("p edge 2 1\ne 1 2\n")

    def broken(*a, **k):
        raise InvariantBreach("synthetic")

    monkeypatch.setattr("rvmis.cli.check_instance", broken)
    assert main(["verify", str(tmp_path)]) == 2
    assert main(["verify", str(tmp_path / "missing")]) == 1


def test_bench(tmp_path, capsys):
    cfg = {"master_seed": 0, "trials": 50, "instances": [{"family": "petersen"}], "algorithms": ["greedy", "plg"]}
    (tmp_path / "cfg.json").write_text(json.dumps(cfg))
    assert main(["bench", str(tmp_path / "cfg.json"), "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["bench", str(tmp_path / "cfg.json"), "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    (tmp_path / "bad.json").write_text(json.dumps(dict(cfg, algorithms=["nope"])))
    assert main(["bench", str(tmp_path / "bad.json")]) == 1


def test_check_instance_runs_everything():
    passed = check_instance(petersen())
    assert any("reduction" in p for p in passed)
    assert any("LP + greedy" in p for p in passed)


def test_shipped_config_runs(capsys):
    from pathlib import Path

    cfg = Path(__file__).resolve().parent.parent / "configs" / "demo.json"
    assert main(["bench", str(cfg), "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("instance,")
