"""Command-line entry point: ``qillume run <preset|config.toml>``."""

from __future__ import annotations

import logging
import sys
from dataclasses import replace
from pathlib import Path

import click

from .errors import ConfigError
from .experiments import PRESETS, WORKERS_ENV, emit, format_rows, load_config, preset, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PARTIAL = 2


def _resolve(target: str):
    if target in PRESETS:
        return preset(target)
    path = Path(target)
    if not path.is_file():
        raise ConfigError(f"{target!r} is neither a preset ({', '.join(sorted(PRESETS))}) nor a config file")
    return load_config(path)


@click.group()
@click.option("-v", "--verbose", count=True, help="Increase log verbosity.")
def main(verbose: int) -> None:
    """Chernoff-bound sweeps for illumination with non-Gaussian probes."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.argument("target")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Output file (default: stdout).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None, help="Output format.")
@click.option("--parallel", type=click.IntRange(min=1), default=None, help=f"Worker processes (env {WORKERS_ENV} overrides).")
@click.option("--dump-matrices", type=click.Path(file_okay=False), default=None, help="Directory for rho0/rho1 triplet dumps.")
@click.option("--refine-pstar", is_flag=True, help="Bisect p* below the grid resolution.")
@click.option("--timing", is_flag=True, help="Include per-row wall time (breaks byte stability).")
def run(target, out_path, fmt, parallel, dump_matrices, refine_pstar, timing):
    """Run a preset (fig2 ... fig11, sec5a-robustness) or a TOML sweep file."""
    try:
        cfg = _resolve(target)
        overrides = {}
        if fmt:
            overrides["fmt"] = fmt
        if parallel:
            overrides["parallelism"] = parallel
        if dump_matrices:
            overrides["dump_dir"] = dump_matrices
        if refine_pstar:
            overrides["refine_pstar"] = True
        if out_path:
            overrides["output_path"] = out_path
        cfg = replace(cfg, **overrides)
        rows = run_sweep(cfg)
    except ConfigError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    if cfg.output_path:
        emit(rows, cfg.output_path, cfg.fmt, timing)
    else:
        click.echo(format_rows(rows, cfg.fmt, timing), nl=False)
    failed = sum(r.failed for r in rows)
    if failed:
        click.echo(f"{failed} of {len(rows)} points failed", err=True)
        sys.exit(EXIT_PARTIAL)
    sys.exit(EXIT_OK)


@main.command("presets")
def list_presets():
    """List built-in presets."""
    for name, cfg in PRESETS.items():
        click.echo(f"{name}\t{cfg.experiment.value}")


if __name__ == "__main__":  # pragma: no cover
    main()
