"""Rendering tests: the four figure kinds, the schema gate, seed bands, and
byte-identical data series.  The integration fixture produces a genuine run
directory through the safelift CLI, consuming the primary package purely via
its external interfaces."""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from plotkit.figures import FIGURE_KINDS, PlotSpec, build_figure, render
from plotkit.cli import main as cli_main
from plotkit.schema import SchemaMismatch, read_csv


def write_metrics(path, steps, seed_offset=0.0):
    lines = ["# schema=metrics-v1 config=deadbeef",
             "step,return_mean,return_std,violation_rate,intervention_rate,slack_rate,min_h"]
    for s in steps:
        lines.append(
            f"{s},{200 + 0.01 * s + seed_offset},{2.0},{max(0.0, 0.2 - s / 10_000)},"
            f"{0.05},{0.01},{-0.5 + s / 20_000}"
        )
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def write_episodes(path, n, seed_offset=0.0):
    lines = ["# schema=episodes-v1 config=deadbeef",
             "episode,end_step,episode_return,violation_rate,intervention_rate,slack_rate,min_h"]
    for i in range(n):
        lines.append(
            f"{i},{(i + 1) * 250},{180 + i + seed_offset},{0.0},{0.02},{0.0},{-0.3 + 0.02 * i}"
        )
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n")


def write_summary(path, run_id="cartpole_stab-agent-abc", rho=0.006, violation=0.0):
    doc = {
        "run_id": run_id,
        "env": run_id.split("-")[0],
        "seeds": [{"seed": 0}],
        "rho_max": {"mean": rho, "std": 0.0},
        "aggregate": {
            "return_mean": {"mean": 240.0, "std": 1.0},
            "violation_rate": {"mean": violation, "std": 0.0},
            "intervention_rate": {"mean": 0.01, "std": 0.0},
            "slack_rate": {"mean": 0.002, "std": 0.0},
            "min_h": {"mean": 0.04, "std": 0.01},
        },
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(doc, f)


@pytest.fixture()
def fake_run(tmp_path):
    run = tmp_path / "cartpole_stab-agent-abc"
    for seed, off in ((0, 0.0), (1, 3.0)):
        write_metrics(run / f"seed{seed}" / "metrics.csv", range(2500, 30_001, 2500), off)
        write_episodes(run / f"seed{seed}" / "episodes.csv", 40, off)
    write_summary(run / "summary.json")
    return run


@pytest.fixture(scope="session")
def real_run(tmp_path_factory):
    """A completed CartPole run directory produced by the safelift CLI."""
    root = tmp_path_factory.mktemp("real-run")
    cfg = {
        "env": "cartpole_stab",
        "seeds": [0],
        "budget": 800,
        "data_steps": 1200,
        "cal_size": 300,
        "rbf_count": 8,
        "eval_every": 400,
        "eval_episodes": 1,
        "final_eval_episodes": 1,
        "start_steps": 200,
        "update_after": 200,
        "gradient_steps": 1,
        "batch_size": 64,
        "action_repeat": 3,
    }
    cfg_path = root / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = root / "runs"
    proc = subprocess.run(
        [sys.executable, "-m", "safelift.cli", "train", "--config", str(cfg_path), "--out", str(out)],
        capture_output=True,
        text=True,
        timeout=600,
    )
    assert proc.returncode == 0, proc.stderr
    run_dirs = list(out.iterdir())
    assert len(run_dirs) == 1
    return run_dirs[0]


class TestFigureKinds:
    def test_all_kinds_render_from_real_run(self, real_run, tmp_path):
        rho_rows = [
            "# schema=rho-report-v1 config=", "env,rho,violation_rate,run_id",
            "cartpole_stab,0.006,0.0,a", "synthetic_contact,0.43,0.08,b",
        ]
        rho_csv = tmp_path / "rho.csv"
        rho_csv.write_text("\n".join(rho_rows) + "\n")
        inputs = {
            "curves": (str(real_run),),
            "barrier_evolution": (str(real_run),),
            "diagnostics": (str(real_run),),
            "rho_scatter": (str(rho_csv),),
        }
        for kind in FIGURE_KINDS:
            out = tmp_path / f"{kind}.png"
            path = render(PlotSpec(kind=kind, inputs=inputs[kind], output=str(out)))
            assert Path(path).stat().st_size > 0, kind

    def test_barrier_evolution_draws_dashed_boundary(self, fake_run):
        fig, _ = build_figure(
            PlotSpec(kind="barrier_evolution", inputs=(str(fake_run),), output="unused.png")
        )
        ax = fig.axes[0]
        dashed_at_zero = [
            ln for ln in ax.get_lines()
            if ln.get_linestyle() == "--" and np.allclose(ln.get_ydata(), 0.0)
        ]
        assert dashed_at_zero, "no dashed h=0 boundary line found"

    def test_curves_band_spans_seeds(self, fake_run):
        fig, series = build_figure(
            PlotSpec(kind="curves", inputs=(str(fake_run),), output="unused.png")
        )
        assert np.all(series["return_mean"]["std"] > 0)  # two seeds differ

    def test_single_seed_band_collapses(self, tmp_path):
        run = tmp_path / "run"
        write_metrics(run / "seed0" / "metrics.csv", range(1000, 5001, 1000))
        fig, series = build_figure(
            PlotSpec(kind="curves", inputs=(str(run),), output="unused.png")
        )
        np.testing.assert_array_equal(series["return_mean"]["std"], 0.0)

    def test_rho_scatter_from_summaries(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        write_summary(a / "summary.json", "cartpole_stab-agent-x", rho=0.006, violation=0.0)
        write_summary(b / "summary.json", "synthetic_contact-agent-y", rho=0.43, violation=0.1)
        fig, series = build_figure(
            PlotSpec(kind="rho_scatter", inputs=(str(a), str(b)), output="unused.png")
        )
        assert len(series["rho"]) == 2
        assert fig.axes[0].get_xscale() == "log"


class TestSchemaGate:
    def test_wrong_schema_tag_raises(self, tmp_path):
        bad = tmp_path / "metrics.csv"
        bad.write_text("# schema=metrics-v999 config=x\nstep,return_mean\n1,2\n")
        with pytest.raises(SchemaMismatch) as err:
            read_csv(bad, "metrics-v1")
        assert "metrics-v999" in str(err.value)

    def test_missing_header_raises(self, tmp_path):
        bad = tmp_path / "metrics.csv"
        bad.write_text("step,return_mean\n1,2\n")
        with pytest.raises(SchemaMismatch):
            read_csv(bad, "metrics-v1")

    def test_render_propagates_mismatch(self, tmp_path):
        run = tmp_path / "run"
        bad = run / "seed0" / "metrics.csv"
        bad.parent.mkdir(parents=True)
        bad.write_text("# schema=episodes-v1 config=x\nstep\n")
        with pytest.raises(SchemaMismatch):
            build_figure(PlotSpec(kind="curves", inputs=(str(run),), output="x.png"))

    def test_summary_without_keys_rejected(self, tmp_path):
        doc = tmp_path / "summary.json"
        doc.write_text("{}")
        with pytest.raises(SchemaMismatch):
            build_figure(PlotSpec(kind="diagnostics", inputs=(str(doc),), output="x.png"))


class TestEdgesAndDeterminism:
    def test_empty_payload_blank_axes_with_warning(self, tmp_path):
        run = tmp_path / "run"
        p = run / "seed0" / "metrics.csv"
        p.parent.mkdir(parents=True)
        p.write_text("# schema=metrics-v1 config=x\n"
                     "step,return_mean,return_std,violation_rate,intervention_rate,slack_rate,min_h\n")
        with pytest.warns(UserWarning, match="no data rows"):
            fig, series = build_figure(
                PlotSpec(kind="curves", inputs=(str(run),), output="x.png")
            )
        assert series["return_mean"]["x"].size == 0

    def test_series_byte_identical_across_runs(self, fake_run):
        spec = PlotSpec(kind="curves", inputs=(str(fake_run),), output="unused.png")
        _, s1 = build_figure(spec)
        _, s2 = build_figure(spec)
        for col in s1:
            for part in ("x", "mean", "std"):
                assert s1[col][part].tobytes() == s2[col][part].tobytes()

    def test_inputs_not_mutated(self, fake_run):
        target = fake_run / "seed0" / "metrics.csv"
        before = target.read_bytes()
        build_figure(PlotSpec(kind="curves", inputs=(str(fake_run),), output="unused.png"))
        assert target.read_bytes() == before

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            PlotSpec(kind="sparkline", inputs=("x",), output="y.png")


class TestCli:
    def test_happy_path(self, fake_run, tmp_path, capsys):
        out = tmp_path / "fig.png"
        rc = cli_main(["--kind", "curves", "--in", str(fake_run), "--out", str(out)])
        assert rc == 0
        assert out.exists()
        assert "wrote" in capsys.readouterr().out

    def test_schema_mismatch_exit_code(self, tmp_path, capsys):
        run = tmp_path / "run"
        bad = run / "seed0" / "metrics.csv"
        bad.parent.mkdir(parents=True)
        bad.write_text("# schema=wrong-v1 config=x\nstep\n")
        rc = cli_main(["--kind", "curves", "--in", str(run), "--out", str(tmp_path / "f.png")])
        assert rc == 2
        assert "schema mismatch" in capsys.readouterr().err
