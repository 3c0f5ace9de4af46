"""Benchmark harness and command line interface tests."""

import csv
import json

import numpy as np
import pytest

from mdkin import cli
from mdkin.geometry import RobotGeometry
from mdkin.harness import (ExperimentConfig, make_inputs, run_accuracy,
                           run_roundtrip, run_timing, write_reports_json,
                           write_timing_csv)
from mdkin.solvers import PAIRS, SOLVERS

CFG = ExperimentConfig(trials=3, samples=25, warmup=1, seed=7)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(warmup=-1)
    with pytest.raises(ValueError):
        ExperimentConfig(pairs=(("alg1", "alg3"),))


def test_inputs_are_deterministic_and_in_space():
    for pair in PAIRS:
        a = make_inputs(pair, 10, 3, CFG.geometry)
        b = make_inputs(pair, 10, 3, CFG.geometry)
        space = SOLVERS[pair[0]][0].input_space
        for sa, sb in zip(a, b):
            assert sa.space == space
            assert (sa.stack == sb.stack).all()


def test_accuracy_reports_structure_and_determinism():
    r1 = run_accuracy(CFG)
    r2 = run_accuracy(CFG)
    assert [r.to_dict() for r in r1] == [r.to_dict() for r in r2]
    for rep in r1:
        assert rep.n_samples == CFG.samples
        assert rep.rms[0] == 0.0  # identical displacement paths
        assert max(rep.max_abs[1:]) <= 1e-10
        assert rep.band == pytest.approx(2.0 / np.sqrt(CFG.samples))


def test_accuracy_negative_control_is_detected():
    """A deliberately perturbed solver must produce nonzero residuals."""
    def broken_alg4(sample, g, branch=1):
        out = SOLVERS["alg4"][1](sample, g, branch)
        st = out.stack.copy()
        st[1] *= 1.0 + 1e-6  # velocity bias well above the pair tolerance
        return type(out)(out.space, st)

    cfg = ExperimentConfig(trials=1, samples=25, seed=7,
                           pairs=(("alg3", "alg4"),))
    rep = run_accuracy(cfg, override={"alg4": broken_alg4})[0]
    assert rep.rms[1] > 1e-10
    assert rep.rms[0] == 0.0  # displacement path untouched


def test_timing_report_and_csv(tmp_path):
    reports = run_timing(CFG)
    for rep in reports:
        for key in rep.pair:
            assert len(rep.seconds[key]) == CFG.trials
            assert all(s > 0.0 for s in rep.seconds[key])
        assert 0.0 <= rep.p_value <= 1.0
    path = tmp_path / "timing.csv"
    write_timing_csv(reports, path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["pair", "solver", "trial", "seconds"]
    assert len(rows) == 1 + len(PAIRS) * 2 * CFG.trials
    for pair, solver, trial, seconds in rows[1:]:
        assert solver in dict(SOLVERS)
        assert int(trial) >= 0
        assert float(seconds) > 0.0

    jpath = tmp_path / "timing.json"
    write_reports_json(reports, jpath)
    loaded = json.loads(jpath.read_text())
    assert [r["pair"] for r in loaded] == [list(p) for p in PAIRS]


def test_roundtrip_report():
    errs = run_roundtrip(ExperimentConfig(samples=15, seed=7))
    assert set(errs) == {f"alg{i}" for i in range(1, 9)}
    assert max(errs.values()) <= 1e-9


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def test_cli_goldens():
    assert cli.main(["goldens"]) == 0


def test_cli_accuracy_and_output(tmp_path, capsys):
    out = tmp_path / "acc.json"
    rc = cli.main(["accuracy", "--samples", "20", "--pairs", "alg1",
                   "--output", str(out)])
    assert rc == 0
    assert "alg1+alg2" in capsys.readouterr().out
    data = json.loads(out.read_text())
    assert data[0]["pair"] == ["alg1", "alg2"]


def test_cli_timing(tmp_path):
    out = tmp_path / "t.csv"
    rc = cli.main(["timing", "--trials", "2", "--samples", "10",
                   "--warmup", "0", "--pairs", "alg5",
                   "--output", str(out)])
    assert rc == 0
    rows = list(csv.reader(open(out)))
    assert len(rows) == 1 + 2 * 2


def test_cli_roundtrip_and_trajectory(tmp_path):
    assert cli.main(["roundtrip", "--samples", "5"]) == 0
    traj = tmp_path / "traj.csv"
    rc = cli.main(["trajectory", "--rate", "10", "--output", str(traj)])
    assert rc == 0
    assert traj.exists()


def test_cli_solve_stdin_file(tmp_path, capsys):
    payload = {"space": "rho",
               "stack": [[50.0, 180.0, 1.0471975511965976],
                         [1.0, 0.5, 0.01], [0.0] * 3, [0.0] * 3]}
    inp = tmp_path / "in.json"
    inp.write_text(json.dumps(payload))
    out = tmp_path / "out.json"
    rc = cli.main(["solve", "alg1", "--input", str(inp),
                   "--output", str(out)])
    assert rc == 0
    result = json.loads(out.read_text())
    assert result["space"] == "q"
    assert np.asarray(result["stack"]).shape == (4, 3)


def test_cli_geometry_file(tmp_path):
    geom = tmp_path / "geom.cfg"
    geom.write_text("l = 400\nl0 = 300\n")
    assert cli.main(["goldens", "--geometry", str(geom)]) == 0


def test_cli_unknown_pair_rejected():
    with pytest.raises(SystemExit):
        cli.main(["accuracy", "--pairs", "nope"])
