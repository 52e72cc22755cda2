"""Mutual information, logarithmic negativity and entanglement entropy of
two-mode probes, all in bits."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assembly import DensityMatrix, probe_density
from .errors import DomainError
from .linalg import block_partition, clamp_spectrum, eigvalsh_blocks
from .probes import signal_strength

__all__ = [
    "CorrelationReport",
    "von_neumann_entropy",
    "mutual_information",
    "partial_transpose",
    "negativity",
    "log_negativity",
    "swap_modes",
    "tmsv_entanglement_closed_form",
    "entanglement_per_photon_limit_check",
    "correlation_report",
]


def _spectrum(mat: np.ndarray) -> np.ndarray:
    return clamp_spectrum(eigvalsh_blocks(mat), "state")


def _entropy_of_values(values: np.ndarray) -> float:
    p = values[values > 0]
    return float(-np.sum(p * np.log2(p)))


def von_neumann_entropy(rho) -> float:
    """``-tr rho log2 rho`` with ``0 log 0 = 0``."""
    data = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=float)
    return _entropy_of_values(_spectrum(data))


def _require_two_mode(rho: DensityMatrix) -> None:
    if not isinstance(rho, DensityMatrix) or not rho.is_two_mode:
        raise DomainError("a two-mode DensityMatrix is required")


def mutual_information(rho: DensityMatrix) -> float:
    """``S(idler) + S(signal) - S(joint)``."""
    _require_two_mode(rho)
    return (
        von_neumann_entropy(rho.idler_marginal())
        + von_neumann_entropy(rho.signal_marginal())
        - von_neumann_entropy(rho.data)
    )


def partial_transpose(rho: DensityMatrix) -> DensityMatrix:
    """Transpose over the idler: ``<i,j|T|i',j'> = <i',j|rho|i,j'>``."""
    _require_two_mode(rho)
    di, ds = rho.dims
    data = rho.as_tensor().transpose(2, 1, 0, 3).reshape(di * ds, di * ds)
    return DensityMatrix(data, rho.dims, rho.trace_deficit, rho.truncation, rho.m_trunc)


def negativity(rho: DensityMatrix) -> float:
    """Sum of the magnitudes of the negative partial-transpose eigenvalues."""
    pt = partial_transpose(rho).data
    vals = eigvalsh_blocks(pt, block_partition(pt))
    return float(-vals[vals < 0].sum())


def log_negativity(rho: DensityMatrix) -> float:
    return math.log2(2.0 * negativity(rho) + 1.0)


def swap_modes(rho: DensityMatrix) -> DensityMatrix:
    """Relabel idler <-> signal."""
    _require_two_mode(rho)
    di, ds = rho.dims
    data = rho.as_tensor().transpose(1, 0, 3, 2).reshape(di * ds, di * ds)
    return DensityMatrix(data, (ds, di), rho.trace_deficit, rho.truncation, rho.m_trunc)


def tmsv_entanglement_closed_form(n_s: float) -> float:
    """Entanglement entropy of a TMSV with mean signal photon number ``n_s``:
    ``(N+1) log2(N+1) - N log2 N``."""
    if n_s < 0:
        raise DomainError("n_s must be nonnegative")
    if n_s == 0:
        return 0.0
    return (n_s + 1.0) * math.log2(n_s + 1.0) - n_s * math.log2(n_s)


def entanglement_per_photon_limit_check(n_s_grid) -> list[tuple[float, float, float]]:
    """``(N_S, E, E/N_S)`` rows for a strictly increasing positive grid."""
    grid = [float(v) for v in n_s_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])) or any(v <= 0 for v in grid):
        raise DomainError("grid must be positive and strictly increasing")
    rows = []
    for n in grid:
        e = tmsv_entanglement_closed_form(n)
        rows.append((n, e, e / n))
    return rows


@dataclass(frozen=True)
class CorrelationReport:
    mutual_info: float
    log_negativity: float
    n_s: float

    @property
    def mi_per_photon(self) -> float:
        return self.mutual_info / self.n_s if self.n_s > 0 else math.nan

    @property
    def ln_per_photon(self) -> float:
        return self.log_negativity / self.n_s if self.n_s > 0 else math.nan


def correlation_report(state, n_s: float | None = None) -> CorrelationReport:
    """Correlations of a probe (pure vector or ensemble) before the channel.

    ``n_s`` defaults to the signal strength of the (first) pure component,
    the normalisation used when comparing probe families.
    """
    rho = probe_density(state)
    if n_s is None:
        v = state if not isinstance(state, list) else state[0][1]
        n_s = signal_strength(v)
    mi = max(mutual_information(rho), 0.0)
    return CorrelationReport(mi, log_negativity(rho), n_s)
