"""Quantum Chernoff bound, classical coherent baseline and derived figures of
merit (quantum advantage, multi-copy error, minimum apparatus efficiency)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .assembly import ChannelParams, DensityMatrix
from .errors import DomainError, NumericalIntegrityError
from .linalg import block_eigh, block_partition

__all__ = [
    "ChernoffResult",
    "AdvantageResult",
    "EfficiencyResult",
    "OverlapCurve",
    "s_overlap",
    "chernoff_bound",
    "chernoff_fixed_alpha",
    "classical_bound",
    "classical_bound_large_bath",
    "quantum_advantage",
    "m_copy_error",
    "min_efficiency",
    "golden_section_min",
    "NO_ADVANTAGE_Q",
]

SCAN_POINTS = 101
ALPHA_TOL = 1e-6
# error probability >= 0.4999 is reported as a blind guess
NO_ADVANTAGE_Q = 0.9998
# eigenvalues below this fraction of their block's largest are treated as
# outside the support
_SUPPORT_RTOL = 1e-14


class OverlapCurve:
    """``alpha -> tr[rho0^alpha rho1^(1-alpha)]`` for a fixed pair.

    Both matrices are split into the blocks of their joint sparsity
    pattern and diagonalised once; each evaluation then costs
    ``sum_b d_b^2``, with ``W_ij = <u_i|v_j>^2`` cached per block.
    """

    def __init__(self, rho0, rho1):
        a = _data(rho0)
        b = _data(rho1)
        if a.shape != b.shape:
            raise DomainError(f"dimension mismatch: {a.shape} vs {b.shape}")
        blocks = block_partition(a, b)
        self._terms = []
        for s0, s1 in zip(block_eigh(a, blocks, "rho0"), block_eigh(b, blocks, "rho1")):
            lam, mu = _support(s0.values), _support(s1.values)
            if not lam.any() or not mu.any():
                continue
            w = (s0.vectors.T @ s1.vectors) ** 2
            keep_i, keep_j = lam > 0, mu > 0
            self._terms.append((np.log(lam[keep_i]), np.log(mu[keep_j]), w[np.ix_(keep_i, keep_j)]))

    def __call__(self, alpha: float) -> float:
        if not 0.0 <= alpha <= 1.0:
            raise DomainError(f"alpha={alpha} outside [0, 1]")
        total = 0.0
        for log_lam, log_mu, w in self._terms:
            total += np.exp(alpha * log_lam) @ w @ np.exp((1.0 - alpha) * log_mu)
        if not math.isfinite(total):
            raise NumericalIntegrityError(f"non-finite overlap at alpha={alpha}")
        return float(total)


def _data(rho) -> np.ndarray:
    return rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=float)


def _support(values: np.ndarray) -> np.ndarray:
    top = values.max() if values.size else 0.0
    return np.where(values > _SUPPORT_RTOL * top, values, 0.0)


def s_overlap(rho0, rho1, alpha: float) -> float:
    """``tr[rho0^alpha rho1^(1-alpha)]`` with ``0^0 = 0`` on null spaces."""
    return OverlapCurve(rho0, rho1)(alpha)


@dataclass(frozen=True)
class ChernoffResult:
    q_value: float
    alpha_star: float
    curve: tuple[tuple[float, float], ...] = field(repr=False, default=())
    truncation: int | None = None
    m_trunc: int | None = None
    trace_deficits: tuple[float, float] = (0.0, 0.0)

    @property
    def error_prob_single_shot(self) -> float:
        return 0.5 * self.q_value

    @property
    def no_advantage(self) -> bool:
        """Error probability rounds to a blind guess (>= 0.4999)."""
        return self.q_value >= NO_ADVANTAGE_Q


def golden_section_min(f, lo: float, hi: float, tol: float = ALPHA_TOL):
    """Minimise a unimodal ``f`` on [lo, hi]; returns ``(x, f(x))``."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _diagnostics(rho0, rho1) -> dict:
    if isinstance(rho1, DensityMatrix):
        d0 = rho0.trace_deficit if isinstance(rho0, DensityMatrix) else 0.0
        return dict(truncation=rho1.truncation, m_trunc=rho1.m_trunc, trace_deficits=(d0, rho1.trace_deficit))
    return {}


def chernoff_bound(rho0, rho1, scan_points: int = SCAN_POINTS, tol: float = ALPHA_TOL) -> ChernoffResult:
    """Minimise the overlap curve over alpha in [0, 1].

    A uniform scan brackets the global minimum without assuming the curve is
    unimodal; golden-section search then refines inside the bracketing
    scan cell pair.
    """
    curve_fn = OverlapCurve(rho0, rho1)
    alphas = np.linspace(0.0, 1.0, scan_points)
    values = np.array([curve_fn(a) for a in alphas])
    i = int(np.argmin(values))
    lo, hi = alphas[max(i - 1, 0)], alphas[min(i + 1, scan_points - 1)]
    a_star, q = golden_section_min(curve_fn, lo, hi, tol)
    if values[i] < q:
        a_star, q = float(alphas[i]), float(values[i])
    return ChernoffResult(
        float(q), float(a_star), tuple(zip(alphas.tolist(), values.tolist())), **_diagnostics(rho0, rho1)
    )


def chernoff_fixed_alpha(rho0, rho1, alpha_fixed: float) -> ChernoffResult:
    """Overlap at a prescribed alpha, e.g. one optimised for a different
    (designed) state."""
    q = s_overlap(rho0, rho1, alpha_fixed)
    return ChernoffResult(q, float(alpha_fixed), ((float(alpha_fixed), q),), **_diagnostics(rho0, rho1))


def classical_bound(omega_sq: float, ch: ChannelParams) -> float:
    """Chernoff bound of a coherent probe with mean photon number
    ``omega_sq``: ``exp(-kappa N_S (sqrt(N_B) - sqrt(N_B + 1))^2)``."""
    if omega_sq < 0:
        raise DomainError("omega_sq must be nonnegative")
    nb = ch.n_bath
    return math.exp(-ch.kappa * omega_sq * (math.sqrt(nb) - math.sqrt(nb + 1.0)) ** 2)


def classical_bound_large_bath(omega_sq: float, ch: ChannelParams) -> float:
    """Bright-background approximation ``exp(-kappa N_S / (4 N_B))``."""
    if ch.n_bath <= 0:
        raise DomainError("the large-bath form needs n_bath > 0")
    return math.exp(-ch.kappa * omega_sq / (4.0 * ch.n_bath))


@dataclass(frozen=True)
class AdvantageResult:
    delta: float
    q_quantum: float
    q_classical: float
    n_s_matched: float

    @property
    def advantage(self) -> bool:
        return self.delta > 0


def quantum_advantage(
    probe_result: ChernoffResult | float,
    matched_ns: float,
    ch: ChannelParams,
    classical_result: ChernoffResult | float | None = None,
) -> AdvantageResult:
    """``Q_classical - Q_probe`` at matched signal strength.

    The classical side is the closed form unless ``classical_result`` is
    given, which is how a noisy transmission line is handled: the noisy
    coherent pair is assembled numerically and its bound passed in.
    """
    q = probe_result.q_value if isinstance(probe_result, ChernoffResult) else float(probe_result)
    if classical_result is None:
        qc = classical_bound(matched_ns, ch)
    elif isinstance(classical_result, ChernoffResult):
        qc = classical_result.q_value
    else:
        qc = float(classical_result)
    return AdvantageResult(qc - q, q, qc, matched_ns)


def m_copy_error(q: float, m: int) -> float:
    """Upper bound ``q**m / 2`` on the error of ``m`` independent copies."""
    if not 0.0 < q <= 1.0:
        raise DomainError(f"q={q} outside (0, 1]")
    if m < 1 or int(m) != m:
        raise DomainError(f"copy count must be a positive integer, got {m}")
    return 0.5 * q**m


@dataclass(frozen=True)
class EfficiencyResult:
    eta: float
    q_tmsv: float
    q_ng: float


def min_efficiency(q_tmsv: float, q_ng: float) -> EfficiencyResult:
    """Success probability ``eta`` with ``q_tmsv**M == q_ng**(eta M)``."""
    for name, q in (("q_tmsv", q_tmsv), ("q_ng", q_ng)):
        if not 0.0 < q < 1.0 - 1e-9:
            raise DomainError(f"{name}={q} leaves no advantage to amortise")
    return EfficiencyResult(math.log(q_tmsv) / math.log(q_ng), q_tmsv, q_ng)
