"""Density matrices for both hypotheses of the illumination protocol.

Target present: the signal mode meets a thermal mode on a beam splitter of
reflectivity ``kappa`` and the detector keeps the reflected port together
with the stored idler. Target absent: the detector sees the idler marginal
and the bare thermal background.

Two-mode matrices are laid out idler-major: flat index
``idler * signal_dim + signal``.
"""

from __future__ import annotations

import enum
import functools
import logging
import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NormalizationError, ResourceError
from .linalg import block_partition, clamp_spectrum
from .probes import FockVector, Op, ProbeSpec, build_probe, choose_truncation
from .special import log_binomial, log_factorial, theta_weights

__all__ = [
    "ChannelParams",
    "NoiseKind",
    "NoiseModel",
    "DensityMatrix",
    "Ensemble",
    "thermal_probs",
    "beam_splitter_table",
    "beam_splitter_amplitude",
    "assemble_rho1",
    "assemble_rho0",
    "assemble_pair",
    "assemble_coherent_rho1",
    "assemble_coherent_rho0",
    "assemble_coherent_pair",
    "mix_local_gaussian",
    "apply_faulty_squeezer",
    "mix_imperfect_operation",
    "noise_signal_photons",
    "probe_density",
    "ensemble_signal_strength",
]

log = logging.getLogger(__name__)

TRACE_TOL = 1e-8
DIM_CAP = 4096
_WEIGHT_TOL = 1e-10


@dataclass(frozen=True)
class ChannelParams:
    """Target reflectivity and thermal background photon number.

    By default the bath fed into the beam splitter has ``n_bath`` photons,
    so the detector background under the target-present hypothesis is
    ``(1 - kappa) n_bath``. With ``matched_background`` the input bath is
    brightened to ``n_bath / (1 - kappa)`` so both hypotheses see the same
    ``n_bath`` background.
    """

    kappa: float = 0.01
    n_bath: float = 1.0
    matched_background: bool = False

    @property
    def bath_input(self) -> float:
        if self.matched_background and self.kappa < 1.0:
            return self.n_bath / (1.0 - self.kappa)
        return self.n_bath

    def __post_init__(self):
        if not 0.0 <= self.kappa <= 1.0:
            raise DomainError(f"kappa={self.kappa} outside [0, 1]")
        if self.n_bath < 0:
            raise DomainError(f"n_bath={self.n_bath} must be nonnegative")


class NoiseKind(str, enum.Enum):
    NONE = "NONE"
    LOCAL_GAUSSIAN = "LOCAL_GAUSSIAN"
    FAULTY_SQUEEZER = "FAULTY_SQUEEZER"
    IMPERFECT_OP = "IMPERFECT_OP"


@dataclass(frozen=True)
class NoiseModel:
    """Probe imperfection.

    ``mixture_weights`` holds ``(probability, discrepancy)`` pairs for
    imperfect photonic operations: discrepancy ``i`` means ``i`` photons
    fewer were added or subtracted.
    """

    kind: NoiseKind = NoiseKind.NONE
    p: float = 0.0
    sigma1: float = 1.0
    sigma2: float = 1.0
    x_actual: float | None = None
    mixture_weights: tuple[tuple[float, int], ...] = ((1.0, 0),)

    def __post_init__(self):
        object.__setattr__(self, "kind", NoiseKind(self.kind))
        object.__setattr__(
            self, "mixture_weights", tuple((float(w), int(i)) for w, i in self.mixture_weights)
        )
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f"mixing probability p={self.p} outside [0, 1]")
        if self.sigma1 <= 0 or self.sigma2 <= 0:
            raise DomainError("noise widths must be positive")
        weights = [w for w, _ in self.mixture_weights]
        if any(w < 0 for w in weights) or abs(sum(weights) - 1.0) > 1e-12:
            raise NormalizationError(f"mixture weights {weights} must be nonnegative and sum to 1")
        if any(i < 0 for _, i in self.mixture_weights):
            raise DomainError("photon discrepancies must be nonnegative")

    @classmethod
    def local_gaussian(cls, p: float, sigma1: float = 1.0, sigma2: float = 1.0) -> "NoiseModel":
        return cls(NoiseKind.LOCAL_GAUSSIAN, p=p, sigma1=sigma1, sigma2=sigma2)

    @classmethod
    def faulty_squeezer(cls, x_actual: float) -> "NoiseModel":
        return cls(NoiseKind.FAULTY_SQUEEZER, x_actual=x_actual)

    @classmethod
    def imperfect(cls, weights: Sequence[tuple[float, int]]) -> "NoiseModel":
        return cls(NoiseKind.IMPERFECT_OP, mixture_weights=tuple(weights))


@dataclass(frozen=True)
class DensityMatrix:
    """Dense real symmetric density matrix with mode dimensions.

    ``dims`` is ``(idler_dim, signal_dim)`` for two-mode states and
    ``(signal_dim,)`` for single-mode ones. ``trace_deficit`` is one minus
    the trace before renormalisation.
    """

    data: np.ndarray
    dims: tuple[int, ...]
    trace_deficit: float = 0.0
    truncation: int | None = None
    m_trunc: int | None = None

    def __post_init__(self):
        d = np.asarray(self.data, dtype=float)
        if d.shape != (math.prod(self.dims),) * 2:
            raise DomainError(f"data shape {d.shape} does not match dims {self.dims}")
        d.setflags(write=False)
        object.__setattr__(self, "data", d)
        object.__setattr__(self, "dims", tuple(int(v) for v in self.dims))

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def is_two_mode(self) -> bool:
        return len(self.dims) == 2

    def trace(self) -> float:
        return float(np.trace(self.data))

    def as_tensor(self) -> np.ndarray:
        """View as ``rho[i, j, i', j']``."""
        di, ds = self.dims
        return self.data.reshape(di, ds, di, ds)

    def idler_marginal(self) -> np.ndarray:
        return np.einsum("ijkj->ik", self.as_tensor())

    def signal_marginal(self) -> np.ndarray:
        if not self.is_two_mode:
            return self.data
        return np.einsum("ijil->jl", self.as_tensor())

    def padded(self, dims: Sequence[int]) -> "DensityMatrix":
        """Embed into larger mode dimensions, zero filling."""
        dims = tuple(dims)
        if len(dims) != len(self.dims) or any(a < b for a, b in zip(dims, self.dims)):
            raise DomainError(f"cannot pad {self.dims} into {dims}")
        if dims == self.dims:
            return self
        if self.is_two_mode:
            big = np.zeros(dims + dims)
            di, ds = self.dims
            big[:di, :ds, :di, :ds] = self.as_tensor()
            data = big.reshape(math.prod(dims), -1)
        else:
            data = np.zeros((dims[0], dims[0]))
            data[: self.dim, : self.dim] = self.data
        return replace(self, data=data, dims=dims)

    def min_eigenvalue(self) -> float:
        blocks = block_partition(self.data)
        lo = 0.0
        for b in blocks:
            lo = min(lo, float(np.linalg.eigvalsh(self.data[np.ix_(b, b)])[0]))
        return lo

    def dump(self, path, fmt: str = "csv") -> None:
        """Write nonzero entries as ``row,col,value`` triplets (csv) or a
        flat little-endian float64 array (bin)."""
        if fmt == "bin":
            self.data.astype("<f8").tofile(path)
            return
        rows, cols = np.nonzero(self.data)
        with open(path, "w") as fh:
            fh.write(f"# dims={','.join(map(str, self.dims))}\nrow,col,value\n")
            for r, c in zip(rows, cols):
                fh.write(f"{r},{c},{self.data[r, c]:.17g}\n")


Ensemble = list  # list[tuple[float, FockVector]]


def thermal_probs(n_bath: float, m_trunc: int) -> np.ndarray:
    """Bose-Einstein weights N^m / (1+N)^(m+1) for m = 0..m_trunc."""
    m = np.arange(m_trunc + 1)
    if n_bath == 0:
        return (m == 0).astype(float)
    return np.exp(m * math.log(n_bath) - (m + 1) * math.log1p(n_bath))


@functools.lru_cache(maxsize=32)
def beam_splitter_table(j_max: int, m_max: int, kappa: float) -> np.ndarray:
    """Amplitudes ``A[j, m, t]`` of the reflecting beam splitter.

    Input: ``j`` signal photons and ``m`` bath photons. Output: ``t`` photons
    in the discarded port and ``j + m - t`` in the detected port. Creation
    operators map as

        a_S^+ -> sqrt(kappa) d^+ + sqrt(1-kappa) e^+
        a_T^+ -> sqrt(1-kappa) d^+ - sqrt(kappa) e^+

    (``d`` detected, ``e`` discarded). Photon number is conserved, so each
    total ``N = j + m`` is an independent (N+1)-dimensional rotation, built
    here from the eigenvectors of its real symmetric tridiagonal generator.
    The closed binomial sum (:func:`beam_splitter_amplitude`) agrees but
    cancels badly once ``N`` grows past a few tens.
    """
    t_max = j_max + m_max
    table = np.zeros((j_max + 1, m_max + 1, t_max + 1))
    theta = math.asin(math.sqrt(kappa))
    for total in range(t_max + 1):
        rot = _sector_rotation(total, theta)
        for j in range(max(0, total - m_max), min(j_max, total) + 1):
            table[j, total - j, : total + 1] = rot[:, j]
    table.setflags(write=False)
    return table


def _sector_rotation(total: int, theta: float) -> np.ndarray:
    """``R[t, j]``: amplitude for ``t`` discarded photons given ``j`` signal
    photons, at fixed total photon number.

    The generator is ``-theta G`` with G antisymmetric tridiagonal,
    ``G[u+1, u] = sqrt((u+1)(total-u))``. Conjugating by ``diag(i^u)``
    turns it into ``i theta T`` with T real symmetric, so
    ``R = Re(i^(t-j) V exp(i theta w) V^T)``.
    """
    if total == 0:
        return np.ones((1, 1))
    u = np.arange(total)
    off = np.sqrt((u + 1.0) * (total - u))
    w, v = eigh_tridiagonal(np.zeros(total + 1), off)
    core = (v * np.exp(1j * theta * w)) @ v.T
    idx = np.arange(total + 1)
    phase = 1j ** ((idx[:, None] - idx[None, :]) % 4)
    return np.real(phase * core)


def beam_splitter_amplitude(j: int, m: int, t: int, kappa: float) -> float:
    """Single amplitude from the closed binomial sum over the ``r`` signal
    photons and ``s = t - r`` bath photons leaving through the discarded port:

        sum_r (-1)^s C(j,r) C(m,s) kappa^((j-r+s)/2) (1-kappa)^((r+m-s)/2)
              sqrt((j+m-t)! t! / (j! m!))

    Magnitudes are formed in log space with the sign carried separately.
    """
    if t < 0 or t > j + m:
        return 0.0
    lk = math.log(kappa) if kappa > 0 else -math.inf
    l1k = math.log1p(-kappa) if kappa < 1 else -math.inf
    shared = 0.5 * (log_factorial(j + m - t) + log_factorial(t) - log_factorial(j) - log_factorial(m))
    total = 0.0
    for r in range(max(0, t - m), min(j, t) + 1):
        s = t - r
        e_k, e_1k = 0.5 * (j - r + s), 0.5 * (r + m - s)
        if (e_k and kappa == 0) or (e_1k and kappa == 1):
            continue
        logmag = (
            log_binomial(j, r) + log_binomial(m, s) + shared
            + (e_k * lk if e_k else 0.0) + (e_1k * l1k if e_1k else 0.0)
        )
        total += (-1.0) ** s * math.exp(logmag)
    return total


def _members_arrays(ensemble):
    """Flatten an ensemble into (weight, idler idx, signal idx, coeffs) tuples."""
    out = []
    for w, v in ensemble:
        if w <= 0:
            continue
        out.append((float(w), v.idler_indices, v.signal_indices, v.coeffs))
    return out


def _check_weights(ensemble) -> None:
    total = sum(w for w, _ in ensemble)
    if abs(total - 1.0) > _WEIGHT_TOL:
        raise NormalizationError(f"ensemble weights sum to {total!r}")


def _dims_for(members, m_trunc: int, two_mode: bool) -> tuple[int, ...]:
    j_top = max(int(js.max()) for _, _, js, _ in members)
    ds = j_top + m_trunc + 1
    if not two_mode:
        return (ds,)
    di = max(int(ix.max()) for _, ix, _, _ in members) + 1
    return (di, ds)


def _channel_output(members, ch: ChannelParams, m_trunc: int, dims) -> np.ndarray:
    """Sum over members, bath photon numbers and discarded-port photon numbers
    of rank-one contributions ``p_m |phi_{m,t}><phi_{m,t}|``."""
    ds = dims[-1]
    size = math.prod(dims)
    out = np.zeros((size, size))
    probs = thermal_probs(ch.bath_input, m_trunc)
    j_top = max(int(js.max()) for _, _, js, _ in members)
    table = beam_splitter_table(j_top, m_trunc, float(ch.kappa))
    for w, ix, js, c in members:
        for m, pm in enumerate(probs):
            if pm == 0.0:
                continue
            amps = table[js, m, :] * c[:, None]  # (n, t)
            for t in range(int(js.max()) + m + 1):
                phi = amps[:, t]
                keep = (js + m - t >= 0) & (phi != 0.0)
                if not keep.any():
                    continue
                rows = ix[keep] * ds + (js[keep] + m - t)
                out[np.ix_(rows, rows)] += (w * pm) * np.outer(phi[keep], phi[keep])
    return out


def _finalize(data, dims, truncation, m_trunc) -> DensityMatrix:
    tr = float(np.trace(data))
    data = 0.5 * (data + data.T)
    return DensityMatrix(data / tr, dims, 1.0 - tr, truncation, m_trunc)


def _escalating(build, truncation: int, n_bath: float, m_trunc: int | None, dim_cap: int, ladder_deficit: float = 0.0):
    """Run ``build(m)`` with the bath cap ``m`` starting at the ladder
    truncation and growing by 25% until the weight lost to the bath cutoff
    (trace deficit beyond the probe's own ladder tail) is below TRACE_TOL.

    An explicit ``m_trunc`` is used as given.
    """
    if m_trunc is not None:
        return build(m_trunc)
    m = truncation
    while True:
        rho = build(m)
        if rho.trace_deficit - ladder_deficit < TRACE_TOL or n_bath == 0:
            return rho
        m = int(m * 1.25) + 1
        log.debug("escalating bath cutoff to %d", m)


def _as_ensemble(state) -> Ensemble:
    if isinstance(state, FockVector):
        return [(1.0, state)]
    ens = list(state)
    _check_weights(ens)
    return ens


def _ensemble_truncation(ens) -> int:
    return max(v.truncation for _, v in ens)


def _ladder_deficit(ens) -> float:
    return sum(w * (1.0 - v.norm_sq) for w, v in ens)


def assemble_rho1(
    state, ch: ChannelParams, m_trunc: int | None = None, dim_cap: int = DIM_CAP, check_psd: bool = True
) -> DensityMatrix:
    """Target-present state for a pure probe or a weighted ensemble of them.

    ``m_trunc`` caps the bath photon number; when omitted it starts at the
    ladder truncation (so the signal dimension is about twice the ladder
    length) and grows by 25% until the trace deficit is below 1e-8.
    """
    ens = _as_ensemble(state)
    members = _members_arrays(ens)
    trunc = _ensemble_truncation(ens)

    def build(m):
        dims = _dims_for(members, m, True)
        if math.prod(dims) > dim_cap:
            raise ResourceError(f"matrix dimension {math.prod(dims)} exceeds cap {dim_cap}")
        return _finalize(_channel_output(members, ch, m, dims), dims, trunc, m)

    rho = _escalating(build, trunc, ch.n_bath, m_trunc, dim_cap, _ladder_deficit(ens))
    if check_psd:
        _check_psd(rho, "rho1")
    return rho


def _idler_weights(ens, di) -> np.ndarray:
    w = np.zeros(di)
    for weight, v in ens:
        np.add.at(w, v.idler_indices, weight * v.coeffs**2)
    return w


def assemble_rho0(state, ch: ChannelParams, m_trunc: int | None = None, dim_cap: int = DIM_CAP) -> DensityMatrix:
    """Target-absent state: idler marginal times the thermal background, on
    the same layout as :func:`assemble_rho1`."""
    ens = _as_ensemble(state)
    members = _members_arrays(ens)
    trunc = _ensemble_truncation(ens)

    def build(m):
        di, ds = _dims_for(members, m, True)
        if di * ds > dim_cap:
            raise ResourceError(f"matrix dimension {di * ds} exceeds cap {dim_cap}")
        diag = np.zeros((di, ds))
        diag[:, : m + 1] = np.outer(_idler_weights(ens, di), thermal_probs(ch.n_bath, m))
        return _finalize(np.diag(diag.ravel()), (di, ds), trunc, m)

    return _escalating(build, trunc, ch.n_bath, m_trunc, dim_cap, _ladder_deficit(ens))


def assemble_pair(state, ch: ChannelParams, m_trunc: int | None = None, dim_cap: int = DIM_CAP):
    """``(rho0, rho1)`` on a common layout."""
    rho1 = assemble_rho1(state, ch, m_trunc, dim_cap)
    rho0 = assemble_rho0(state, ch, rho1.m_trunc, dim_cap)
    return rho0, rho1


def _check_psd(rho: DensityMatrix, what: str) -> None:
    for b in block_partition(rho.data):
        clamp_spectrum(np.linalg.eigvalsh(rho.data[np.ix_(b, b)]), what)


# --- coherent probes -------------------------------------------------------

def _coherent_vector(omega_sq: float, trunc: int) -> np.ndarray:
    n = np.arange(trunc + 1)
    if omega_sq == 0:
        return (n == 0).astype(float)
    return np.exp(0.5 * (-omega_sq + n * math.log(omega_sq) - log_factorial(n)))


def coherent_truncation(omega_sq: float, base: int = 35) -> int:
    """Smallest cutoff >= base whose Poisson tail is below 1e-8 (1e-12 used)."""
    n = base
    while 1.0 - float(np.sum(_coherent_vector(omega_sq, n) ** 2)) >= 1e-12:
        n = int(n * 1.25) + 1
    return n


def assemble_coherent_rho1(
    omega_sq: float,
    ch: ChannelParams,
    p: float = 0.0,
    noise_weights: np.ndarray | None = None,
    m_trunc: int | None = None,
    trunc: int | None = None,
) -> DensityMatrix:
    """Single-mode target-present state for a (noisy) coherent probe.

    The probe is ``(1-p)|omega><omega| + p sum_n mu_n |n><n|``; each branch
    passes through the same beam splitter by linearity.
    """
    if omega_sq < 0:
        raise DomainError("omega_sq must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p} outside [0, 1]")
    trunc = trunc or coherent_truncation(omega_sq)
    members = _coherent_members(omega_sq, trunc, p, noise_weights)

    def build(m):
        dims = _dims_for(members, m, False)
        return _finalize(_channel_output(members, ch, m, dims), dims, trunc, m)

    rho = _escalating(build, trunc, ch.n_bath, m_trunc, DIM_CAP)
    _check_psd(rho, "coherent rho1")
    return rho


def _coherent_members(omega_sq, trunc, p, noise_weights):
    c = _coherent_vector(omega_sq, trunc)
    zeros = np.zeros(trunc + 1, dtype=int)
    members = []
    if p < 1:
        members.append((1.0 - p, zeros, np.arange(trunc + 1), c))
    if p > 0:
        mu = theta_weights(1.0) if noise_weights is None else np.asarray(noise_weights, dtype=float)
        if abs(mu.sum() - 1.0) > _WEIGHT_TOL:
            raise NormalizationError(f"noise weights sum to {mu.sum()!r}")
        for n, w in enumerate(mu):
            members.append((p * w, np.zeros(1, dtype=int), np.array([n]), np.ones(1)))
    return members


def assemble_coherent_rho0(ch: ChannelParams, dim: int | None = None, m_trunc: int | None = None) -> DensityMatrix:
    """Thermal background alone, optionally zero padded to ``dim``."""
    m = m_trunc if m_trunc is not None else 35
    while True:
        probs = thermal_probs(ch.n_bath, m)
        deficit = 1.0 - probs.sum()
        if deficit < TRACE_TOL or ch.n_bath == 0:
            break
        m = int(m * 1.25) + 1
    size = max(dim or 0, m + 1)
    diag = np.zeros(size)
    diag[: m + 1] = probs / probs.sum()
    return DensityMatrix(np.diag(diag), (size,), deficit, None, m)


def assemble_coherent_pair(omega_sq: float, ch: ChannelParams, p: float = 0.0, noise_weights=None):
    rho1 = assemble_coherent_rho1(omega_sq, ch, p, noise_weights)
    rho0 = assemble_coherent_rho0(ch, rho1.dim, rho1.m_trunc)
    return rho0, rho1


# --- noise models ----------------------------------------------------------

def mix_local_gaussian(v: FockVector, noise: NoiseModel) -> Ensemble:
    """``(1-p)|psi><psi| + p (sum mu_n |n><n|) x (sum nu_m |m><m|)`` as an
    ensemble of pure ladder states."""
    if noise.kind is not NoiseKind.LOCAL_GAUSSIAN:
        raise DomainError(f"expected LOCAL_GAUSSIAN noise, got {noise.kind.value}")
    ens = []
    if noise.p < 1:
        ens.append((1.0 - noise.p, v))
    if noise.p > 0:
        mu, nu = theta_weights(noise.sigma1), theta_weights(noise.sigma2)
        for n, a in enumerate(mu):
            for m, b in enumerate(nu):
                ens.append((noise.p * a * b, FockVector.fock(n, m)))
    _check_weights(ens)
    return ens


def noise_signal_photons(noise: NoiseModel) -> float:
    """Mean signal photon number of the noise branch, ``sum_m m nu_m``."""
    nu = theta_weights(noise.sigma2)
    return float(np.dot(np.arange(nu.size), nu))


def apply_faulty_squeezer(spec: ProbeSpec, noise: NoiseModel) -> ProbeSpec:
    """Spec rebuilt at the lower squeezing actually produced."""
    if noise.kind is not NoiseKind.FAULTY_SQUEEZER or noise.x_actual is None:
        raise DomainError("expected FAULTY_SQUEEZER noise with x_actual set")
    if noise.x_actual > spec.x:
        raise DomainError(f"x_actual={noise.x_actual} exceeds designed x={spec.x}")
    return replace(spec, x=noise.x_actual)


def _reduced(spec: ProbeSpec, i: int) -> ProbeSpec:
    if i < 0 or i > max(spec.k, spec.l):
        raise DomainError(f"discrepancy {i} outside [0, {max(spec.k, spec.l)}] for {spec.label}")
    k = max(spec.k - i, 0) if spec.k else 0
    l = max(spec.l - i, 0) if spec.l else 0
    if k == 0 and l == 0:
        return ProbeSpec(Op.TMSV, 0, 0, spec.x)
    return ProbeSpec(spec.op, k, l, spec.x)


def mix_imperfect_operation(base: ProbeSpec, noise: NoiseModel, trunc: int | None = None) -> Ensemble:
    """Mixture of the intended state with states carrying ``i`` fewer
    added/subtracted photons.

    Without an explicit ``trunc`` each component gets its own default
    cutoff, which keeps a subtracted mixture containing the Gaussian parent
    inside the dimension cap.
    """
    if noise.kind is not NoiseKind.IMPERFECT_OP:
        raise DomainError(f"expected IMPERFECT_OP noise, got {noise.kind.value}")
    ens = []
    for w, i in noise.mixture_weights:
        if w > 0:
            spec = _reduced(base, i)
            ens.append((w, build_probe(spec, trunc or choose_truncation(spec))))
    _check_weights(ens)
    return ens


# --- probe-level quantities -------------------------------------------------

def probe_density(state) -> DensityMatrix:
    """Two-mode density matrix ``sum_w w |v><v|`` of a probe before the channel."""
    ens = _as_ensemble(state)
    members = _members_arrays(ens)
    di = max(int(ix.max()) for _, ix, _, _ in members) + 1
    ds = max(int(js.max()) for _, _, js, _ in members) + 1
    out = np.zeros((di * ds, di * ds))
    for w, ix, js, c in members:
        rows = ix * ds + js
        out[np.ix_(rows, rows)] += w * np.outer(c, c)
    return _finalize(out, (di, ds), _ensemble_truncation(ens), 0)


def ensemble_signal_strength(state) -> float:
    """Mean signal photon number of a pure probe or an ensemble."""
    return sum(w * float(np.dot(v.signal_indices, v.coeffs**2)) for w, v in _as_ensemble(state))
