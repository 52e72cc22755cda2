import json
import math

import pytest
from click.testing import CliRunner

from qillume import experiments as ex
from qillume.cli import main
from qillume.errors import ConfigError, DomainError
from qillume.experiments import (
    PRESETS,
    Experiment,
    ResultRow,
    SweepConfig,
    config_from_mapping,
    emit,
    expand_grid,
    find_threshold_p_star,
    format_rows,
    load_config,
    run_sweep,
)
from qillume.probes import Op, ProbeSpec

TINY = SweepConfig(
    Experiment.DELTA_VS_N,
    (ProbeSpec.family(Op.ADD_IDLER, 1, 0.05),),
    (0, 1),
)

TOML = """
experiment = "CB_VS_N"
kappa = 0.01
n_bath = 1.0
n_range = [0, 1]
x = 0.05

[[probe]]
op = "ADD_SIGNAL"

[output]
format = "csv"
"""


def _row(**kw):
    base = dict(
        experiment="CB_VS_N", probe="p", op="TMSV", k=0, l=0, n=0, kappa=0.01, n_bath=1.0,
        p=0.0, p_double_prime=math.nan, x=0.2, x_prime=math.nan,
    )
    base.update(kw)
    return ResultRow(**base)


class TestGrid:
    def test_fig2_layout(self):
        pts = expand_grid(PRESETS["fig2"])
        assert len(pts) == 48  # four families, n = 0..5, two squeezings
        assert [p.index for p in pts] == list(range(48))
        x02 = [p for p in pts if p.spec.x == 0.2]
        assert len(x02) == 24

    def test_every_preset_expands(self):
        assert set(PRESETS) == {
            "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "sec5a-robustness"
        }
        for name, cfg in PRESETS.items():
            assert expand_grid(cfg), name

    def test_imperfect_grid_skips_invalid_weights(self):
        pts = expand_grid(PRESETS["fig9"])
        assert all(p.p + p.p_double_prime <= 1 + 1e-12 for p in pts)
        assert len(pts) == 10 + 9 + 8 + 7

    def test_robustness_default_grid(self):
        cfg = SweepConfig(Experiment.ROBUSTNESS_P, (ProbeSpec(Op.TMSV),))
        assert [p.p for p in expand_grid(cfg)] == [round(0.1 * i, 12) for i in range(11)]

    def test_empty_probe_list(self):
        cfg = SweepConfig(Experiment.CB_VS_N, (), (1, 2))
        assert run_sweep(cfg) == []
        assert format_rows([]) == ",".join(ex._field_names(False)) + "\n"


class TestValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(kappas=(1.5,)),
            dict(n_bath=-1.0),
            dict(p_grid=(1.2,)),
            dict(p_step=0.3),
            dict(fmt="xml"),
            dict(parallelism=0),
            dict(sigma1=0.0),
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ConfigError):
            SweepConfig(Experiment.CB_VS_N, **kwargs)

    def test_faulty_squeezer_above_design(self):
        with pytest.raises(ConfigError):
            SweepConfig(Experiment.FAULTY_SQUEEZER, (ProbeSpec(Op.TMSV, x=0.05),), x_actual=(0.06,))

    def test_mapping(self):
        cfg = config_from_mapping(
            {
                "experiment": "ROBUSTNESS_P",
                "probe": [{"op": "TMSV", "x": [0.2, 0.05]}, {"op": "ADD_IDLER", "k": 1}],
                "noise": {"p": [0.0, 0.5], "sigma1": 2.0},
                "output": {"parallelism": 3},
            }
        )
        assert cfg.probes == (ProbeSpec(Op.TMSV, x=0.2), ProbeSpec(Op.TMSV, x=0.05), ProbeSpec(Op.ADD_IDLER, 1, 0, 0.2))
        assert cfg.p_grid == (0.0, 0.5) and cfg.sigma1 == 2.0 and cfg.parallelism == 3

    @pytest.mark.parametrize(
        "data",
        [
            {},
            {"experiment": "NOPE"},
            {"experiment": "CB_VS_N", "bogus": 1},
            {"experiment": "CB_VS_N", "probe": [{"op": "XYZ"}]},
            {"experiment": "CB_VS_N", "probe": [{"op": "TMSV", "k": 2}]},
            {"experiment": "CB_VS_N", "kappa": "a"},
        ],
    )
    def test_mapping_errors(self, data):
        with pytest.raises(ConfigError):
            config_from_mapping(data)

    def test_load_toml(self, tmp_path):
        path = tmp_path / "c.toml"
        path.write_text(TOML)
        cfg = load_config(path)
        assert cfg.experiment is Experiment.CB_VS_N and cfg.n_range == (0, 1)
        (tmp_path / "bad.toml").write_text("experiment = [")
        with pytest.raises(ConfigError):
            load_config(tmp_path / "bad.toml")
        with pytest.raises(ConfigError):
            load_config(tmp_path / "missing.toml")


class TestEmission:
    def test_csv_formatting(self):
        text = format_rows([_row(q_value=0.123456789012345678, no_advantage=False)])
        header, line = text.splitlines()
        assert header.split(",")[:3] == ["experiment", "probe", "op"]
        assert "wall_time" not in header
        assert "0.123456789012" in line and "0.1234567890123" not in line
        assert len(text.splitlines()) == 2

    def test_timing_column_optional(self):
        text = format_rows([_row(wall_time=1.5)], include_timing=True)
        assert text.splitlines()[0].endswith("wall_time")

    def test_json(self, tmp_path):
        out = emit([_row(q_value=0.5)], tmp_path / "sub" / "r.json", fmt="json")
        data = json.loads(out.read_text())
        assert data[0]["q_value"] == 0.5 and data[0]["x_prime"] is None

    def test_io_error_names_path(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("")
        with pytest.raises(OSError, match="file"):
            emit([], blocker / "r.csv")

    def test_unknown_format(self):
        with pytest.raises(ConfigError):
            format_rows([], fmt="xml")


class TestSweep:
    def test_rows_and_provenance(self):
        rows = run_sweep(TINY)
        assert [r.n for r in rows] == [0, 1]
        assert rows[0].probe.startswith("TMSV") and rows[1].op == "ADD_IDLER"
        assert all(r.status == "ok" and r.truncation == 35 and r.trace_deficit < 1e-8 for r in rows)
        assert rows[1].q_value < rows[0].q_value
        assert rows[0].delta == pytest.approx(
            ex.classical_bound(rows[0].n_s, TINY.channel) - rows[0].q_value, abs=0
        )

    def test_byte_stable_and_parallel_sound(self):
        serial = format_rows(run_sweep(TINY))
        again = format_rows(run_sweep(TINY))
        parallel = format_rows(run_sweep(SweepConfig(**{**TINY.__dict__, "parallelism": 2})))
        assert serial == again == parallel

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(ex.WORKERS_ENV, "3")
        assert ex._worker_count(1) == 3
        monkeypatch.setenv(ex.WORKERS_ENV, "zero")
        with pytest.raises(ConfigError):
            ex._worker_count(1)

    def test_failed_point_is_flagged(self):
        cfg = SweepConfig(Experiment.CB_VS_N, (ProbeSpec(Op.TMSV, x=0.9),))
        (row,) = run_sweep(cfg)
        assert row.failed and "TruncationError" in row.message
        assert math.isnan(row.q_value)

    def test_entanglement_limit(self):
        cfg = SweepConfig(Experiment.ENTANGLEMENT_LIMIT, n_s_grid=(1.0, 10.0))
        rows = run_sweep(cfg)
        assert rows[0].entanglement == pytest.approx(2.0)
        assert rows[1].entanglement / 10 < rows[0].entanglement

    def test_correlation_rows(self):
        cfg = SweepConfig(Experiment.CORRELATIONS_VS_P, (ProbeSpec(Op.TMSV, x=0.2),), p_grid=(0.0, 0.5))
        r0, r5 = run_sweep(cfg)
        assert r0.mi == pytest.approx(2 * ex.tmsv_entanglement_closed_form(0.25), abs=1e-8)
        assert r5.mi < r0.mi and r5.ln < r0.ln and r5.n_s == r0.n_s


class TestPStar:
    GRID = [round(0.1 * i, 12) for i in range(11)]

    def test_largest_advantage_point(self):
        known = {p: p <= 0.5 for p in self.GRID}
        assert find_threshold_p_star(ProbeSpec(Op.TMSV), evaluated=known) == 0.5

    def test_non_monotone_uses_largest(self):
        known = {p: p in (0.0, 0.1, 0.9) for p in self.GRID}
        assert find_threshold_p_star(ProbeSpec(Op.TMSV), evaluated=known) == 0.9

    def test_none(self):
        known = {p: False for p in self.GRID}
        assert math.isnan(find_threshold_p_star(ProbeSpec(Op.TMSV), evaluated=known))

    def test_refinement(self, monkeypatch):
        monkeypatch.setattr(ex, "_advantage_at", lambda spec, p, ch, s1, s2: p < 0.4321)
        assert find_threshold_p_star(ProbeSpec(Op.TMSV)) == 0.4
        refined = find_threshold_p_star(ProbeSpec(Op.TMSV), refine=True, refine_tol=1e-4)
        assert 0.4321 - 1e-4 <= refined < 0.4321

    def test_bad_step(self):
        with pytest.raises(DomainError):
            find_threshold_p_star(ProbeSpec(Op.TMSV), step=0.15)

    def test_summary_rows(self, monkeypatch):
        def fake(pt):
            res = pt.p <= 0.3
            return dict(q_value=0.99 if res else 0.99995, no_advantage=not res)

        monkeypatch.setitem(ex._EVALUATORS, Experiment.ROBUSTNESS_P, fake)
        cfg = SweepConfig(Experiment.ROBUSTNESS_P, (ProbeSpec(Op.TMSV),))
        rows = run_sweep(cfg)
        summary = rows[-1]
        assert summary.experiment == "ROBUSTNESS_P:p_star" and summary.p_star == 0.3
        assert len(rows) == 12


class TestCli:
    def test_presets(self):
        res = CliRunner().invoke(main, ["presets"])
        assert res.exit_code == 0 and "sec5a-robustness" in res.output

    def test_config_error_exit(self, tmp_path):
        res = CliRunner().invoke(main, ["run", "no-such-preset"])
        assert res.exit_code == 1
        bad = tmp_path / "bad.toml"
        bad.write_text('experiment = "NOPE"\n')
        assert CliRunner().invoke(main, ["run", str(bad)]).exit_code == 1

    def test_run_config_to_file(self, tmp_path):
        cfg = tmp_path / "c.toml"
        cfg.write_text(TOML)
        out = tmp_path / "r.json"
        res = CliRunner().invoke(main, ["run", str(cfg), "--out", str(out), "--format", "json",
                                        "--dump-matrices", str(tmp_path / "dump")])
        assert res.exit_code == 0, res.output
        rows = json.loads(out.read_text())
        assert [r["n"] for r in rows] == [0, 1]
        assert len(list((tmp_path / "dump").glob("*_rho1.csv"))) == 2

    def test_partial_failure_exit(self, tmp_path):
        cfg = tmp_path / "c.toml"
        cfg.write_text('experiment = "CB_VS_N"\n[[probe]]\nop = "TMSV"\nx = 0.9\n')
        res = CliRunner().invoke(main, ["run", str(cfg)])
        assert res.exit_code == 2
        assert "failed" in res.output
