import csv
import io
import json
import math
import subprocess
import sys

import pytest

from jumpgames import GameSpec, Poisson, outcomes
from jumpgames.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_outcomes_draw_regimes(capsys):
    code, out, _ = run(capsys, "outcomes", "--k", "2", "--poisson", "5", "--variant", "normal")
    assert code == 0 and float(rows(out)[0]["draw"]) > 0
    code, out, _ = run(capsys, "outcomes", "--k", "2", "--poisson", "0.8")
    assert code == 0 and float(rows(out)[0]["draw"]) == 0.0


def test_outcomes_both(capsys):
    code, out, _ = run(capsys, "outcomes", "--k", "1", "--poisson", "3", "--variant", "both")
    r = rows(out)
    assert code == 0 and [x["variant"] for x in r] == ["normal", "misere"]
    for x in r:
        assert abs(float(x["loss"]) + float(x["win"]) + float(x["draw"]) - 1) < 1e-10
    assert r[0]["c_hat"] == "" and float(r[1]["c_hat"]) > 0


def test_json_matches_csv(capsys):
    argv = ["outcomes", "--k", "2", "--finite", "0.1,0.3,0.6", "--variant", "both"]
    _, out_csv, _ = run(capsys, *argv)
    _, out_json, _ = run(capsys, *argv, "--json")
    for a, b in zip(rows(out_csv), json.loads(out_json)):
        for key, v in b.items():
            assert a[key] == ("" if v is None else str(v))


def test_sweep_order_and_point_consistency(capsys):
    code, out, _ = run(capsys, "sweep", "--k", "2,1", "--grid", "1", "2", "0.5", "--variant", "both")
    r = rows(out)
    assert code == 0
    assert [(x["k"], x["lambda"], x["variant"]) for x in r[:3]] == [
        ("1", "1.0", "normal"), ("1", "1.0", "misere"), ("1", "1.5", "normal")]
    assert len(r) == 2 * 3 * 2
    _, one, _ = run(capsys, "outcomes", "--k", "2", "--poisson", "1.5")
    point = rows(one)[0]
    row = [x for x in r if x["k"] == "2" and x["lambda"] == "1.5" and x["variant"] == "normal"][0]
    for key in ("loss", "win", "draw", "c_k", "slope_at_ck"):
        assert row[key] == point[key]


def test_sweep_large_rates(capsys):
    _, out, _ = run(capsys, "sweep", "--k", "1,2", "--lambdas", "10,20")
    r = {(x["k"], x["lambda"]): x for x in rows(out)}
    for lam in ("10.0", "20.0"):
        one, two = r[("1", lam)], r[("2", lam)]
        assert float(two["loss"]) <= float(one["loss"])
        assert float(two["draw"]) < float(one["draw"])


def test_sweep_row_errors(capsys, monkeypatch):
    import jumpgames.cli as cli
    from jumpgames.errors import NoConvergence

    real = cli._outcome_row

    def flaky(spec, tol, max_iter):
        if spec.dist.rate == 2.0:
            raise NoConvergence("stuck", last=0.1, step=1e-3, iterations=1)
        return real(spec, tol, max_iter)

    monkeypatch.setattr(cli, "_outcome_row", flaky)
    code, out, _ = run(capsys, "sweep", "--k", "2", "--lambdas", "1,2")
    r = rows(out)
    assert code == 0 and r[0]["error"] == "" and r[1]["error"].startswith("stuck") and r[1]["loss"] == ""
    code, _, _ = run(capsys, "sweep", "--k", "2", "--lambdas", "2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [["sweep", "--grid", "2", "1", "0.1"], ["sweep", "--grid", "1", "2", "0"], ["sweep"],
     ["sweep", "--grid", "0.001", "1000", "0.001"], ["outcomes"], ["outcomes", "--poisson", "-2"],
     ["outcomes", "--finite", "0.5,0.6"], ["outcomes", "--k", "0", "--poisson", "1"],
     ["simulate", "--poisson", "3", "--samples", "0"], ["simulate", "--poisson", "3", "--horizon", "0"],
     ["simulate", "--poisson", "3", "--horizon", "500", "--samples", "5"],
     ["outcomes", "--poisson", "abc"], ["bogus"]],
)
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 3


def test_solver_failure_exit(capsys):
    assert main(["outcomes", "--k", "2", "--poisson", "2.4", "--max-iter", "3"]) == 2


def test_phase(capsys):
    code, out, _ = run(capsys, "phase")
    r = rows(out)[0]
    assert code == 0
    assert abs(float(r["lambda_c"]) - 2.41) < 0.02
    assert abs(float(r["lambda_0"]) - 2.43634) < 1e-3
    assert abs(float(r["eta_max"]) - 0.52839925) < 1e-5


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "--k", "2", "--poisson", "3")
    r = rows(out)
    assert code == 0 and [(x["i"], x["j"]) for x in r] == [("0", "1"), ("0", "2"), ("1", "2")]
    nl = outcomes(GameSpec(2, "normal", Poisson(3))).loss
    assert float(r[0]["p"]) == pytest.approx(1 - math.exp(-3 * nl), abs=1e-14)


def test_simulate_rows_and_reproducible(capsys, tmp_path):
    argv = ["simulate", "--k", "2", "--poisson", "3", "--horizon", "4", "--samples", "4000", "--seed", "5"]
    code, out, _ = run(capsys, *argv)
    r = rows(out)
    assert code == 0 and len(r) == 4
    assert float(r[0]["analytic_loss"]) == pytest.approx(math.exp(-3), abs=1e-15)
    assert all(abs(float(x["z_score"])) <= 4 for x in r)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, *argv, "--out", str(p1))
    run(capsys, *argv, "--out", str(p2))
    assert p1.read_bytes() == p2.read_bytes() == out.encode()
    code, out, _ = run(capsys, *argv[:-4], "--samples", "2000", "--variant", "both")
    assert code == 0 and rows(out)[0]["variant"] == "normal" and rows(out)[-1]["variant"] == "misere"


def test_simulate_tripwire(capsys, monkeypatch):
    import jumpgames.cli as cli

    real = cli.horizon_sequence

    def shifted(spec, horizon, tol):
        loss, win, draw = real(spec, horizon, tol)
        return loss + 0.2, win, draw - 0.2

    monkeypatch.setattr(cli, "horizon_sequence", shifted)
    code, _, err = run(capsys, "simulate", "--k", "1", "--poisson", "2", "--horizon", "2", "--samples", "2000")
    assert code == 1 and "tripwire" in err


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "jumpgames.cli", "outcomes", "--k", "2", "--poisson", "5", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)[0]["variant"] == "normal"
