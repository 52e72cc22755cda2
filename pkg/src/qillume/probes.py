"""Truncated Fock expansions of Gaussian and photon-added/-subtracted probes.

Every probe family is a pure two-mode state supported on a correlated ladder

    |psi> = sum_n c_n |n + idler_offset, n + signal_offset>,

so a single coefficient array plus two integer offsets describes all of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DomainError, TruncationError
from .special import hyp2f1_regularized, log_binomial

__all__ = [
    "Op",
    "ProbeSpec",
    "FockVector",
    "build_probe",
    "signal_strength",
    "idler_strength",
    "choose_truncation",
    "coherent_signal_match",
    "TAIL_TOL",
    "X_CEILING",
]

TAIL_TOL = 1e-8
X_CEILING = 0.95


class Op(str, enum.Enum):
    TMSV = "TMSV"
    ADD_BOTH = "ADD_BOTH"
    SUB_BOTH = "SUB_BOTH"
    ADD_IDLER = "ADD_IDLER"
    ADD_SIGNAL = "ADD_SIGNAL"
    SUB_IDLER = "SUB_IDLER"
    SUB_SIGNAL = "SUB_SIGNAL"

    @property
    def is_subtraction(self) -> bool:
        return self in (Op.SUB_BOTH, Op.SUB_IDLER, Op.SUB_SIGNAL)


_IDLER_ONLY = (Op.ADD_IDLER, Op.SUB_IDLER)
_SIGNAL_ONLY = (Op.ADD_SIGNAL, Op.SUB_SIGNAL)


@dataclass(frozen=True, order=True)
class ProbeSpec:
    """Probe family, photon counts and squeezing ``x = tanh(r)**2``.

    ``k`` counts photons added to / removed from the idler, ``l`` those of
    the signal.
    """

    op: Op
    k: int = 0
    l: int = 0
    x: float = 0.2

    def __post_init__(self):
        object.__setattr__(self, "op", Op(self.op))
        if self.k < 0 or self.l < 0 or int(self.k) != self.k or int(self.l) != self.l:
            raise DomainError(f"photon counts must be nonnegative integers: k={self.k}, l={self.l}")
        if not 0.0 <= self.x <= X_CEILING:
            raise DomainError(f"x={self.x} outside the supported range [0, {X_CEILING}]")
        op = self.op
        if op is Op.TMSV and (self.k or self.l):
            raise DomainError("TMSV takes k = l = 0")
        if op in _IDLER_ONLY and self.l:
            raise DomainError(f"{op.value} acts on the idler only; l must be 0")
        if op in _SIGNAL_ONLY and self.k:
            raise DomainError(f"{op.value} acts on the signal only; k must be 0")

    @classmethod
    def family(cls, op: Op | str, n: int, x: float) -> "ProbeSpec":
        """Spec with ``n`` photons on whichever modes ``op`` touches."""
        op = Op(op)
        if op is Op.TMSV or n == 0:
            return cls(Op.TMSV, 0, 0, x)
        if op in _IDLER_ONLY:
            return cls(op, n, 0, x)
        if op in _SIGNAL_ONLY:
            return cls(op, 0, n, x)
        return cls(op, n, n, x)

    @property
    def label(self) -> str:
        return f"{self.op.value}(k={self.k},l={self.l},x={self.x:g})"


@dataclass(frozen=True)
class FockVector:
    """Normalised ladder coefficients of a pure two-mode state.

    ``coeffs[i]`` multiplies ``|n + idler_offset, n + signal_offset>`` with
    ``n = n_start + i``.
    """

    coeffs: np.ndarray
    n_start: int
    idler_offset: int
    signal_offset: int
    truncation: int
    tail_weight: float = 0.0
    spec: ProbeSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        if self.n_start + min(self.idler_offset, self.signal_offset) < 0:
            raise DomainError("ladder offsets produce negative Fock indices")

    @property
    def ladder(self) -> np.ndarray:
        return np.arange(self.n_start, self.n_start + len(self.coeffs))

    @property
    def idler_indices(self) -> np.ndarray:
        return self.ladder + self.idler_offset

    @property
    def signal_indices(self) -> np.ndarray:
        return self.ladder + self.signal_offset

    @property
    def norm_sq(self) -> float:
        return float(np.dot(self.coeffs, self.coeffs))

    @classmethod
    def fock(cls, i: int, j: int) -> "FockVector":
        """The product Fock state ``|i, j>``."""
        n = min(i, j)
        return cls(np.array([1.0]), n, i - n, j - n, n)

    def to_dense(self, idler_dim: int | None = None, signal_dim: int | None = None) -> np.ndarray:
        """State vector in the idler-major product basis."""
        di = idler_dim or int(self.idler_indices.max()) + 1
        ds = signal_dim or int(self.signal_indices.max()) + 1
        psi = np.zeros(di * ds)
        psi[self.idler_indices * ds + self.signal_indices] = self.coeffs
        return psi


def choose_truncation(spec: ProbeSpec) -> int:
    """Starting ladder cutoff: 35 for TMSV/addition, 45 for subtraction."""
    return 45 if Op(spec.op).is_subtraction else 35


def _log_norm_and_terms(spec: ProbeSpec, ladder: np.ndarray) -> tuple[float, np.ndarray]:
    """Return ``(ln Z, ln|c_n|^2 + ln Z)``, i.e. unnormalised log weights and
    the log of the closed-form normalisation."""
    op, k, l, x = spec.op, spec.k, spec.l, spec.x
    lx = math.log(x) if x > 0 else -math.inf
    lb = np.vectorize(log_binomial, otypes=[float])

    def xpow(exponent):
        # x**0 == 1 even at x == 0
        exponent = np.asarray(exponent, dtype=float)
        with np.errstate(invalid="ignore"):
            return np.where(exponent == 0, 0.0, exponent * lx)

    if op is Op.TMSV:
        return -math.log1p(-x), xpow(ladder)
    if op is Op.ADD_BOTH:
        log_z = math.log(hyp2f1_regularized(k + 1, l + 1, 1, x).value)
        return log_z, xpow(ladder) + lb(ladder + k, k) + lb(ladder + l, l)
    if op in (Op.ADD_IDLER, Op.ADD_SIGNAL, Op.SUB_IDLER, Op.SUB_SIGNAL):
        m = k + l
        if op in (Op.ADD_IDLER, Op.ADD_SIGNAL):
            terms = xpow(ladder) + lb(ladder + m, m)
        else:
            terms = xpow(ladder - m) + lb(ladder, m)
        return -(1 + m) * math.log1p(-x), terms
    # SUB_BOTH; for l > k the roles of k and l are interchanged throughout
    hi, lo = max(k, l), min(k, l)
    log_z = math.log(hyp2f1_regularized(hi + 1, hi + 1, 1 + hi - lo, x).value) + log_binomial(hi, lo)
    return log_z, xpow(ladder - hi) + lb(ladder, k) + lb(ladder, l)


def _offsets(spec: ProbeSpec) -> tuple[int, int, int]:
    """(n_start, idler_offset, signal_offset)."""
    op, k, l = spec.op, spec.k, spec.l
    if op in (Op.TMSV, Op.ADD_BOTH, Op.ADD_IDLER, Op.ADD_SIGNAL):
        return 0, k, l
    if op is Op.SUB_BOTH:
        return max(k, l), -k, -l
    if op is Op.SUB_IDLER:
        return k, -k, 0
    return l, 0, -l  # SUB_SIGNAL


def build_probe(spec: ProbeSpec, trunc: int | None = None, tol: float = TAIL_TOL) -> FockVector:
    """Coefficient vector of ``spec`` on ladder indices ``n_start..trunc``.

    Coefficients are normalised by the closed-form infinite sum, so the
    weight missing from the truncated vector is exactly the discarded tail.

    Raises:
        TruncationError: if the discarded tail weight is ``>= tol``; the
            error's ``required`` attribute holds a sufficient cutoff.
    """
    if trunc is None:
        trunc = choose_truncation(spec)
    n_start, io, so = _offsets(spec)
    if trunc < n_start:
        raise TruncationError(f"truncation {trunc} below first ladder index {n_start}", n_start)
    ladder = np.arange(n_start, trunc + 1)
    log_z, terms = _log_norm_and_terms(spec, ladder)
    coeffs = np.exp(0.5 * (terms - log_z))
    tail = max(0.0, 1.0 - float(np.dot(coeffs, coeffs)))
    if tail >= tol:
        required = trunc
        while True:
            required = int(required * 1.25) + 1
            lz, t = _log_norm_and_terms(spec, np.arange(n_start, required + 1))
            if 1.0 - np.exp(t - lz).sum() < tol or required > 100_000:
                break
        raise TruncationError(
            f"{spec.label}: tail weight {tail:.3g} at N={trunc}; need N >= {required}", required
        )
    return FockVector(coeffs, n_start, io, so, trunc, tail, spec)


def signal_strength(v: FockVector) -> float:
    """Mean photon number of the signal mode."""
    return float(np.dot(v.signal_indices, v.coeffs**2))


def idler_strength(v: FockVector) -> float:
    """Mean photon number of the idler mode."""
    return float(np.dot(v.idler_indices, v.coeffs**2))


def coherent_signal_match(v: FockVector) -> float:
    """|omega|^2 of the coherent probe with the same signal strength as ``v``."""
    return signal_strength(v)


def with_squeezing(spec: ProbeSpec, x: float) -> ProbeSpec:
    return replace(spec, x=x)
