"""Declarative parameter sweeps over probes, channels and noise models.

A :class:`SweepConfig` expands into an ordered list of independent grid
points. Points are evaluated sequentially or by a bounded process pool;
rows are always returned in grid order so output files do not depend on
the degree of parallelism.
"""

from __future__ import annotations

import concurrent.futures
import csv
import enum
import functools
import io
import json
import logging
import math
import os
import time
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Iterable, Mapping

import numpy as np

from .assembly import (
    ChannelParams,
    NoiseModel,
    assemble_coherent_pair,
    assemble_pair,
    ensemble_signal_strength,
    mix_imperfect_operation,
    mix_local_gaussian,
    probe_density,
)
from .correlations import log_negativity, mutual_information, tmsv_entanglement_closed_form
from .discrimination import (
    ChernoffResult,
    chernoff_bound,
    chernoff_fixed_alpha,
    classical_bound,
    min_efficiency,
)
from .errors import ConfigError, DomainError, QillumeError
from .probes import Op, ProbeSpec, build_probe, signal_strength
from .special import theta_weights

__all__ = [
    "Experiment",
    "SweepConfig",
    "ResultRow",
    "GridPoint",
    "PRESETS",
    "preset",
    "load_config",
    "config_from_mapping",
    "expand_grid",
    "evaluate_point",
    "run_sweep",
    "find_threshold_p_star",
    "emit",
    "format_rows",
    "WORKERS_ENV",
]

log = logging.getLogger(__name__)

WORKERS_ENV = "QILLUME_WORKERS"
FLOAT_DIGITS = 12
_NAN = math.nan


class Experiment(str, enum.Enum):
    CB_VS_N = "CB_VS_N"
    DELTA_VS_N = "DELTA_VS_N"
    CB_VS_KAPPA_SET = "CB_VS_KAPPA_SET"
    DELTA_VS_KAPPA = "DELTA_VS_KAPPA"
    ROBUSTNESS_P = "ROBUSTNESS_P"
    DELTA_VS_P_NOISY_LINE = "DELTA_VS_P_NOISY_LINE"
    FAULTY_SQUEEZER = "FAULTY_SQUEEZER"
    IMPERFECT_SUBTRACTION = "IMPERFECT_SUBTRACTION"
    MIN_EFFICIENCY = "MIN_EFFICIENCY"
    CORRELATIONS_VS_P = "CORRELATIONS_VS_P"
    ENTANGLEMENT_LIMIT = "ENTANGLEMENT_LIMIT"


@dataclass(frozen=True)
class SweepConfig:
    """Grid definition for one experiment.

    ``probes`` are templates: when ``n_range`` is set each template's
    operation and squeezing are combined with every ``n`` through
    :meth:`ProbeSpec.family`; otherwise the specs are used as given.
    """

    experiment: Experiment
    probes: tuple[ProbeSpec, ...] = ()
    n_range: tuple[int, ...] | None = None
    kappas: tuple[float, ...] = (0.01,)
    n_bath: float = 1.0
    p_grid: tuple[float, ...] = (0.0,)
    sigma1: float = 1.0
    sigma2: float = 1.0
    x_actual: tuple[float, ...] = ()
    p_double_prime: tuple[float, ...] = ()
    n_s_grid: tuple[float, ...] = ()
    p_step: float = 0.1
    refine_pstar: bool = False
    matched_background: bool = False
    output_path: str | None = None
    fmt: str = "csv"
    parallelism: int = 1
    dump_dir: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "experiment", Experiment(self.experiment))
        if any(not 0.0 <= k <= 1.0 for k in self.kappas):
            raise ConfigError(f"kappa values must lie in [0, 1]: {self.kappas}")
        if self.n_bath < 0:
            raise ConfigError("n_bath must be nonnegative")
        if any(not 0.0 <= p <= 1.0 for p in self.p_grid):
            raise ConfigError(f"noise weights must lie in [0, 1]: {self.p_grid}")
        if any(not 0.0 <= p <= 1.0 for p in self.p_double_prime):
            raise ConfigError(f"p'' values must lie in [0, 1]: {self.p_double_prime}")
        if self.sigma1 <= 0 or self.sigma2 <= 0:
            raise ConfigError("noise widths must be positive")
        if self.n_range is not None and any(n < 0 for n in self.n_range):
            raise ConfigError("photon numbers must be nonnegative")
        if not 0 < self.p_step <= 1 or abs(round(1 / self.p_step) * self.p_step - 1) > 1e-9:
            raise ConfigError(f"p_step={self.p_step} must divide [0, 1]")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"unknown output format {self.fmt!r}")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be at least 1")
        if self.experiment is Experiment.FAULTY_SQUEEZER:
            for spec in self.probes:
                bad = [xa for xa in self.x_actual if xa > spec.x]
                if bad:
                    raise ConfigError(f"x_actual {bad} exceeds designed x={spec.x}")
        if self.experiment is Experiment.ENTANGLEMENT_LIMIT and any(v <= 0 for v in self.n_s_grid):
            raise ConfigError("n_s_grid must be positive")

    @property
    def channel(self) -> ChannelParams:
        return ChannelParams(self.kappas[0], self.n_bath, self.matched_background)


@dataclass(frozen=True)
class ResultRow:
    """One evaluated grid point with its full parameter provenance."""

    experiment: str
    probe: str
    op: str
    k: int
    l: int
    n: int
    kappa: float
    n_bath: float
    p: float
    p_double_prime: float
    x: float
    x_prime: float
    q_value: float = _NAN
    alpha_star: float = _NAN
    error_prob: float = _NAN
    no_advantage: bool | None = None
    delta: float = _NAN
    eta: float = _NAN
    mi: float = _NAN
    ln: float = _NAN
    entanglement: float = _NAN
    n_s: float = _NAN
    p_star: float = _NAN
    truncation: int | None = None
    m_trunc: int | None = None
    trace_deficit: float = _NAN
    status: str = "ok"
    message: str = ""
    wall_time: float = _NAN

    @property
    def failed(self) -> bool:
        return self.status != "ok"


# fields that change between otherwise identical runs
VOLATILE_FIELDS = ("wall_time",)


@dataclass(frozen=True)
class GridPoint:
    """A single independent work item."""

    index: int
    experiment: Experiment
    template: ProbeSpec
    spec: ProbeSpec
    n: int
    kappa: float
    n_bath: float
    p: float = 0.0
    p_double_prime: float = _NAN
    x_prime: float = _NAN
    sigma1: float = 1.0
    sigma2: float = 1.0
    matched_background: bool = False
    dump_dir: str | None = None
    n_s_value: float = _NAN

    @property
    def channel(self) -> ChannelParams:
        return ChannelParams(self.kappa, self.n_bath, self.matched_background)

    def base_row(self) -> dict:
        spec = self.spec
        return dict(
            experiment=self.experiment.value,
            probe=spec.label,
            op=self.template.op.value,
            k=spec.k,
            l=spec.l,
            n=self.n,
            kappa=self.kappa,
            n_bath=self.n_bath,
            p=self.p,
            p_double_prime=self.p_double_prime,
            x=spec.x,
            x_prime=self.x_prime,
        )


# --- grid expansion --------------------------------------------------------

def _specs(cfg: SweepConfig) -> list[tuple[ProbeSpec, ProbeSpec, int]]:
    """(template, concrete spec, n) triples in configuration order."""
    out = []
    for tpl in cfg.probes:
        if cfg.n_range is None:
            out.append((tpl, tpl, max(tpl.k, tpl.l)))
        else:
            for n in cfg.n_range:
                out.append((tpl, ProbeSpec.family(tpl.op, n, tpl.x), n))
    return out


def _p_values(cfg: SweepConfig) -> tuple[float, ...]:
    if cfg.experiment is Experiment.ROBUSTNESS_P and cfg.p_grid == (0.0,):
        steps = int(round(1 / cfg.p_step))
        return tuple(round(i * cfg.p_step, 12) for i in range(steps + 1))
    return cfg.p_grid


def expand_grid(cfg: SweepConfig) -> list[GridPoint]:
    """Deterministic list of grid points; ``index`` is the emission order."""
    common = dict(
        n_bath=cfg.n_bath,
        sigma1=cfg.sigma1,
        sigma2=cfg.sigma2,
        matched_background=cfg.matched_background,
        dump_dir=cfg.dump_dir,
    )
    raw: list[dict] = []
    exp = cfg.experiment
    if exp is Experiment.ENTANGLEMENT_LIMIT:
        tmsv = ProbeSpec(Op.TMSV)
        for ns in cfg.n_s_grid:
            raw.append(dict(template=tmsv, spec=tmsv, n=0, kappa=cfg.kappas[0], n_s_value=float(ns)))
    else:
        for tpl, spec, n in _specs(cfg):
            for kappa in cfg.kappas:
                base = dict(template=tpl, spec=spec, n=n, kappa=kappa)
                if exp is Experiment.FAULTY_SQUEEZER:
                    raw.extend({**base, "x_prime": xa} for xa in cfg.x_actual)
                elif exp is Experiment.IMPERFECT_SUBTRACTION:
                    for pdd in cfg.p_double_prime:
                        for p in cfg.p_grid:
                            if p + pdd <= 1.0 + 1e-12:
                                raw.append({**base, "p": p, "p_double_prime": pdd})
                else:
                    raw.extend({**base, "p": p} for p in _p_values(cfg))
    return [GridPoint(index=i, experiment=exp, **common, **r) for i, r in enumerate(raw)]


# --- point evaluation ------------------------------------------------------

def _state(spec: ProbeSpec, p: float, sigma1: float, sigma2: float):
    v = build_probe(spec)
    if p == 0:
        return v
    return mix_local_gaussian(v, NoiseModel.local_gaussian(p, sigma1, sigma2))


@functools.lru_cache(maxsize=64)
def _chernoff(spec: ProbeSpec, p: float, ch: ChannelParams, sigma1: float, sigma2: float, dump_dir=None):
    rho0, rho1 = assemble_pair(_state(spec, p, sigma1, sigma2), ch)
    if dump_dir:
        _dump(dump_dir, f"{spec.label}_p{p:g}_k{ch.kappa:g}", rho0, rho1)
    return chernoff_bound(rho0, rho1)


def _dump(dump_dir, stem, rho0, rho1) -> None:
    d = Path(dump_dir)
    d.mkdir(parents=True, exist_ok=True)
    safe = "".join(c if c.isalnum() or c in "._-" else "_" for c in stem)
    rho0.dump(d / f"{safe}_rho0.csv")
    rho1.dump(d / f"{safe}_rho1.csv")


def _chernoff_fields(res: ChernoffResult) -> dict:
    return dict(
        q_value=res.q_value,
        alpha_star=res.alpha_star,
        error_prob=res.error_prob_single_shot,
        no_advantage=res.no_advantage,
        truncation=res.truncation,
        m_trunc=res.m_trunc,
        trace_deficit=max(res.trace_deficits),
    )


def _eval_standard(pt: GridPoint) -> dict:
    res = _chernoff(pt.spec, pt.p, pt.channel, pt.sigma1, pt.sigma2, pt.dump_dir)
    out = _chernoff_fields(res)
    n_s = signal_strength(build_probe(pt.spec))
    out["n_s"] = n_s
    if pt.p == 0:
        # the closed-form coherent baseline only applies to a noiseless line
        out["delta"] = classical_bound(n_s, pt.channel) - res.q_value
    return out


def _eval_noisy_line(pt: GridPoint) -> dict:
    """Probe and coherent baseline both carry the local noise admixture."""
    res = _chernoff(pt.spec, pt.p, pt.channel, pt.sigma1, pt.sigma2, pt.dump_dir)
    n_s = signal_strength(build_probe(pt.spec))
    c0, c1 = assemble_coherent_pair(n_s, pt.channel, pt.p, theta_weights(pt.sigma2))
    qc = chernoff_bound(c0, c1).q_value
    return {**_chernoff_fields(res), "n_s": n_s, "delta": qc - res.q_value}


def _eval_faulty(pt: GridPoint) -> dict:
    """The actual state is built at ``x'`` but measured with the optimal
    alpha of the designed state at ``x``."""
    designed = _chernoff(pt.spec, 0.0, pt.channel, pt.sigma1, pt.sigma2)
    actual_spec = replace(pt.spec, x=pt.x_prime)
    v = build_probe(actual_spec)
    rho0, rho1 = assemble_pair(v, pt.channel)
    res = chernoff_fixed_alpha(rho0, rho1, designed.alpha_star)
    n_s = signal_strength(v)
    return {**_chernoff_fields(res), "n_s": n_s, "delta": classical_bound(n_s, pt.channel) - res.q_value}


def _eval_imperfect(pt: GridPoint) -> dict:
    """Weight ``p`` on the intended state, ``p''`` on the Gaussian parent and
    the remainder on the state with one photon fewer per mode."""
    n = max(pt.spec.k, pt.spec.l)
    p_prime = max(1.0 - pt.p - pt.p_double_prime, 0.0)
    weights: dict[int, float] = {}
    for w, i in ((pt.p, 0), (p_prime, min(1, n)), (pt.p_double_prime, n)):
        weights[i] = weights.get(i, 0.0) + w
    noise = NoiseModel.imperfect(sorted((w, i) for i, w in weights.items()))
    ens = mix_imperfect_operation(pt.spec, noise)
    rho0, rho1 = assemble_pair(ens, pt.channel)
    res = chernoff_bound(rho0, rho1)
    n_s = ensemble_signal_strength(ens)
    return {**_chernoff_fields(res), "n_s": n_s, "delta": classical_bound(n_s, pt.channel) - res.q_value}


def _eval_efficiency(pt: GridPoint) -> dict:
    res = _chernoff(pt.spec, pt.p, pt.channel, pt.sigma1, pt.sigma2, pt.dump_dir)
    ref = _chernoff(ProbeSpec(Op.TMSV, 0, 0, pt.spec.x), pt.p, pt.channel, pt.sigma1, pt.sigma2)
    eff = min_efficiency(ref.q_value, res.q_value)
    n_s = signal_strength(build_probe(pt.spec))
    return {**_chernoff_fields(res), "n_s": n_s, "eta": eff.eta}


def _eval_correlations(pt: GridPoint) -> dict:
    """Raw MI and LN in bits; ``n_s`` is the noiseless probe's signal
    strength, the normalisation for per-photon comparisons."""
    state = _state(pt.spec, pt.p, pt.sigma1, pt.sigma2)
    rho = probe_density(state)
    v = build_probe(pt.spec)
    return dict(
        mi=max(mutual_information(rho), 0.0),
        ln=log_negativity(rho),
        n_s=signal_strength(v),
        truncation=v.truncation,
        trace_deficit=v.tail_weight,
    )


def _eval_entanglement(pt: GridPoint) -> dict:
    return dict(entanglement=tmsv_entanglement_closed_form(pt.n_s_value), n_s=pt.n_s_value)


_EVALUATORS = {
    Experiment.CB_VS_N: _eval_standard,
    Experiment.DELTA_VS_N: _eval_standard,
    Experiment.CB_VS_KAPPA_SET: _eval_standard,
    Experiment.DELTA_VS_KAPPA: _eval_standard,
    Experiment.ROBUSTNESS_P: _eval_standard,
    Experiment.DELTA_VS_P_NOISY_LINE: _eval_noisy_line,
    Experiment.FAULTY_SQUEEZER: _eval_faulty,
    Experiment.IMPERFECT_SUBTRACTION: _eval_imperfect,
    Experiment.MIN_EFFICIENCY: _eval_efficiency,
    Experiment.CORRELATIONS_VS_P: _eval_correlations,
    Experiment.ENTANGLEMENT_LIMIT: _eval_entanglement,
}


def evaluate_point(pt: GridPoint) -> ResultRow:
    """Evaluate one grid point; library errors become a failed row."""
    start = time.perf_counter()
    base = pt.base_row()
    try:
        values = _EVALUATORS[pt.experiment](pt)
        status, message = "ok", ""
    except QillumeError as exc:
        log.warning("point %d (%s) failed: %s", pt.index, base["probe"], exc)
        values, status, message = {}, "failed", f"{type(exc).__name__}: {exc}"
    return ResultRow(**base, **values, status=status, message=message, wall_time=time.perf_counter() - start)


# --- robustness threshold --------------------------------------------------

def _advantage_at(spec: ProbeSpec, p: float, ch: ChannelParams, sigma1: float, sigma2: float) -> bool:
    return not _chernoff(spec, p, ch, sigma1, sigma2).no_advantage


def find_threshold_p_star(
    probe: ProbeSpec,
    step: float = 0.1,
    ch: ChannelParams | None = None,
    sigma1: float = 1.0,
    sigma2: float = 1.0,
    refine: bool = False,
    refine_tol: float = 1e-3,
    evaluated: Mapping[float, bool] | None = None,
) -> float:
    """Largest grid ``p`` whose error-probability bound is below 0.4999.

    Returns NaN when no grid point shows an advantage. ``evaluated`` may
    supply already-known ``{p: has_advantage}`` results. With ``refine`` the
    crossing between ``p*`` and the next grid point is located by
    bisection.
    """
    if not 0 < step <= 1 or abs(round(1 / step) * step - 1) > 1e-9:
        raise DomainError(f"step={step} must divide [0, 1]")
    ch = ch or ChannelParams()
    known = dict(evaluated or {})
    grid = [round(i * step, 12) for i in range(int(round(1 / step)) + 1)]

    def adv(p):
        if p not in known:
            known[p] = _advantage_at(probe, p, ch, sigma1, sigma2)
        return known[p]

    flags = [adv(p) for p in grid]
    winners = [p for p, ok in zip(grid, flags) if ok]
    if not winners:
        return _NAN
    p_star = winners[-1]
    if not refine or p_star == grid[-1]:
        return p_star
    lo, hi = p_star, round(p_star + step, 12)
    while hi - lo > refine_tol:
        mid = 0.5 * (lo + hi)
        if adv(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _p_star_rows(cfg: SweepConfig, rows: list[ResultRow]) -> list[ResultRow]:
    """Summary rows carrying p* for each (probe, kappa) of a robustness sweep."""
    out = []
    groups: dict[tuple, list[ResultRow]] = {}
    for r in rows:
        groups.setdefault((r.probe, r.op, r.kappa), []).append(r)
    for (label, op, kappa), members in groups.items():
        if any(r.failed for r in members):
            first = members[0]
            out.append(replace(first, p=_NAN, status="failed", message="p* undefined: grid point failed"))
            continue
        first = members[0]
        spec = _spec_from_row(first)
        ch = ChannelParams(kappa, cfg.n_bath, cfg.matched_background)
        known = {r.p: not r.no_advantage for r in members}
        p_star = find_threshold_p_star(
            spec, cfg.p_step, ch, cfg.sigma1, cfg.sigma2, refine=cfg.refine_pstar, evaluated=known
        )
        out.append(
            replace(
                first,
                experiment=f"{cfg.experiment.value}:p_star",
                p=_NAN,
                q_value=_NAN,
                alpha_star=_NAN,
                error_prob=_NAN,
                no_advantage=None,
                delta=_NAN,
                p_star=p_star,
                wall_time=_NAN,
            )
        )
    return out


def _spec_from_row(row: ResultRow) -> ProbeSpec:
    if row.k == 0 and row.l == 0:
        return ProbeSpec(Op.TMSV, 0, 0, row.x)
    return ProbeSpec(Op(row.op), row.k, row.l, row.x)


# --- sweep driver ----------------------------------------------------------

def _worker_count(requested: int) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError as exc:
            raise ConfigError(f"{WORKERS_ENV}={env!r} is not an integer") from exc
        if value < 1:
            raise ConfigError(f"{WORKERS_ENV} must be at least 1")
        return value
    return requested


def run_sweep(cfg: SweepConfig) -> list[ResultRow]:
    """Evaluate every grid point; rows come back in grid order.

    Failed points are kept as rows with ``status == "failed"``.
    """
    points = expand_grid(cfg)
    workers = min(_worker_count(cfg.parallelism), max(len(points), 1))
    if workers <= 1:
        rows = [evaluate_point(pt) for pt in points]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate_point, points))
    if cfg.experiment is Experiment.ROBUSTNESS_P:
        rows = rows + _p_star_rows(cfg, rows)
    return rows


# --- emission --------------------------------------------------------------

def _field_names(include_timing: bool) -> list[str]:
    names = [f.name for f in fields(ResultRow)]
    return names if include_timing else [n for n in names if n not in VOLATILE_FIELDS]


def _fmt_value(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        return f"{v:.{FLOAT_DIGITS}g}"
    return str(v)


def _json_value(v: Any) -> Any:
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            return None
        return float(f"{v:.{FLOAT_DIGITS}g}")
    if isinstance(v, np.integer):
        return int(v)
    return v


def format_rows(rows: Iterable[ResultRow], fmt: str = "csv", include_timing: bool = False) -> str:
    """Serialise rows; the result is byte-stable for equal inputs."""
    names = _field_names(include_timing)
    rows = list(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names)
        for r in rows:
            d = asdict(r)
            writer.writerow([_fmt_value(d[n]) for n in names])
        return buf.getvalue()
    if fmt == "json":
        data = [{n: _json_value(asdict(r)[n]) for n in names} for r in rows]
        return json.dumps(data, indent=2) + "\n"
    raise ConfigError(f"unknown output format {fmt!r}")


def emit(rows: Iterable[ResultRow], path, fmt: str = "csv", include_timing: bool = False) -> Path:
    """Write rows to ``path`` as CSV or JSON.

    Raises:
        OSError: with the offending path in the message.
    """
    text = format_rows(rows, fmt, include_timing)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc
    return path


# --- configuration ---------------------------------------------------------

_FAMILIES = (Op.ADD_IDLER, Op.ADD_SIGNAL, Op.ADD_BOTH, Op.SUB_BOTH)


def _templates(ops: Iterable[Op], xs: Iterable[float]) -> tuple[ProbeSpec, ...]:
    return tuple(ProbeSpec.family(op, 1, x) for x in xs for op in ops)


def _grid(stop: float, step: float = 0.1) -> tuple[float, ...]:
    return tuple(round(i * step, 12) for i in range(int(round(stop / step)) + 1))


PRESETS: dict[str, SweepConfig] = {
    # Chernoff bound against photon number, two squeezings
    "fig2": SweepConfig(Experiment.CB_VS_N, _templates(_FAMILIES, (0.2, 0.05)), tuple(range(6))),
    "fig3": SweepConfig(Experiment.DELTA_VS_N, _templates(_FAMILIES, (0.2, 0.05)), tuple(range(6))),
    "fig4": SweepConfig(
        Experiment.CB_VS_KAPPA_SET,
        _templates(_FAMILIES, (0.2,)),
        tuple(range(6)),
        kappas=(0.0009, 0.001, 0.003, 0.05),
    ),
    "fig5": SweepConfig(
        Experiment.DELTA_VS_KAPPA,
        _templates(_FAMILIES, (0.2,)),
        (5,),
        kappas=(0.001, 0.003, 0.005, 0.01, 0.02, 0.03, 0.05),
    ),
    "fig6": SweepConfig(
        Experiment.DELTA_VS_P_NOISY_LINE,
        _templates(_FAMILIES, (0.2, 0.05)),
        (5,),
        p_grid=_grid(0.5),
    ),
    "fig7": SweepConfig(
        Experiment.FAULTY_SQUEEZER,
        _templates(_FAMILIES, (0.05,)),
        tuple(range(6)),
        x_actual=(0.005, 0.015, 0.025, 0.045),
    ),
    "fig8": SweepConfig(
        Experiment.MIN_EFFICIENCY, _templates(_FAMILIES, (0.2,)), tuple(range(1, 6)), p_grid=(0.0, 0.3)
    ),
    "fig9": SweepConfig(
        Experiment.IMPERFECT_SUBTRACTION,
        (ProbeSpec(Op.SUB_BOTH, 2, 2, 0.2),),
        None,
        p_grid=_grid(1.0),
        p_double_prime=(0.1, 0.2, 0.3, 0.4),
    ),
    # advantage against the squeezing shortfall x - x'
    "fig10": SweepConfig(
        Experiment.FAULTY_SQUEEZER,
        _templates(_FAMILIES, (0.05,)),
        (5,),
        x_actual=(0.005, 0.01, 0.015, 0.02, 0.025, 0.03, 0.035, 0.04, 0.045, 0.05),
    ),
    "fig11": SweepConfig(
        Experiment.CORRELATIONS_VS_P,
        (ProbeSpec(Op.TMSV, 0, 0, 0.2),) + _templates(_FAMILIES, (0.2,)),
        (5,),
        p_grid=_grid(0.5),
    ),
    # p* of the Gaussian parent and of single-mode addition with n = 1..5
    "sec5a-robustness": SweepConfig(
        Experiment.ROBUSTNESS_P,
        (ProbeSpec(Op.TMSV, 0, 0, 0.2), ProbeSpec(Op.TMSV, 0, 0, 0.05))
        + tuple(
            ProbeSpec.family(op, n, x)
            for x in (0.2, 0.05)
            for op in (Op.ADD_IDLER, Op.ADD_SIGNAL)
            for n in range(1, 6)
        ),
        None,
        p_step=0.1,
    ),
}


def preset(name: str) -> SweepConfig:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def _floats(value, key) -> tuple[float, ...]:
    if isinstance(value, (int, float)):
        return (float(value),)
    try:
        return tuple(float(v) for v in value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{key} must be a number or a list of numbers") from exc


def config_from_mapping(data: Mapping[str, Any]) -> SweepConfig:
    """Build a :class:`SweepConfig` from a parsed TOML document.

    Top-level keys: ``experiment``, ``kappa``, ``n_bath``, ``n_range``,
    ``x``, ``matched_background``. Tables: ``[[probe]]`` (``op`` plus
    optional ``k``, ``l``, ``x``), ``[noise]`` (``p``, ``sigma1``,
    ``sigma2``, ``x_actual``, ``p_double_prime``, ``p_step``),
    ``[output]`` (``path``, ``format``, ``parallelism``) and ``[limit]``
    (``n_s``).
    """
    known = {"experiment", "kappa", "n_bath", "n_range", "x", "matched_background", "probe", "noise", "output", "limit"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    try:
        experiment = Experiment(data["experiment"])
    except KeyError:
        raise ConfigError("configuration needs an 'experiment' key") from None
    except ValueError:
        raise ConfigError(f"unknown experiment {data['experiment']!r}") from None
    xs = _floats(data.get("x", 0.2), "x")
    n_range = data.get("n_range")
    if n_range is not None:
        n_range = tuple(int(n) for n in n_range)
    probes = []
    try:
        for entry in data.get("probe", []):
            op = Op(entry["op"])
            for x in _floats(entry["x"], "probe.x") if "x" in entry else xs:
                if n_range is None:
                    probes.append(ProbeSpec(op, int(entry.get("k", 0)), int(entry.get("l", 0)), x))
                else:
                    probes.append(ProbeSpec.family(op, 1, x))
    except (KeyError, ValueError, DomainError) as exc:
        raise ConfigError(f"invalid probe entry: {exc}") from exc
    noise = data.get("noise", {})
    output = data.get("output", {})
    limit = data.get("limit", {})
    try:
        return SweepConfig(
            experiment=experiment,
            probes=tuple(probes),
            n_range=n_range,
            kappas=_floats(data.get("kappa", 0.01), "kappa"),
            n_bath=float(data.get("n_bath", 1.0)),
            p_grid=_floats(noise.get("p", 0.0), "noise.p"),
            sigma1=float(noise.get("sigma1", 1.0)),
            sigma2=float(noise.get("sigma2", 1.0)),
            x_actual=_floats(noise.get("x_actual", ()), "noise.x_actual"),
            p_double_prime=_floats(noise.get("p_double_prime", ()), "noise.p_double_prime"),
            p_step=float(noise.get("p_step", 0.1)),
            n_s_grid=_floats(limit.get("n_s", ()), "limit.n_s"),
            matched_background=bool(data.get("matched_background", False)),
            output_path=output.get("path"),
            fmt=output.get("format", "csv"),
            parallelism=int(output.get("parallelism", 1)),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc


def load_config(path) -> SweepConfig:
    """Read a TOML sweep description."""
    try:
        import tomllib  # type: ignore[import-not-found]
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    path = Path(path)
    try:
        with path.open("rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    return config_from_mapping(data)
