"""Scalar special functions: Gauss hypergeometric series, theta normalisation,
log-factorials.

Every routine here works with the small integer parameters that appear in
photon-added and photon-subtracted state normalisations, so plain positive
series with ratio recursion are enough; no analytic continuation is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "SeriesValue",
    "hyp2f1_regularized",
    "jacobi_theta3_zero",
    "log_factorial",
    "log_binomial",
    "theta_weights",
]

REL_TOL = 1e-15
MAX_TERMS = 1_000_000

_TABLE_SIZE = 20_001
# ln(n!) for n < _TABLE_SIZE; never mutated after import.
_LOG_FACT = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, _TABLE_SIZE, dtype=float)))))
_LOG_FACT.setflags(write=False)


@dataclass(frozen=True)
class SeriesValue:
    """Result of a positive series summation."""

    value: float
    terms_used: int
    converged: bool

    def __float__(self) -> float:
        return self.value


def hyp2f1_regularized(a: int, b: int, c: int, x: float, max_terms: int = MAX_TERMS) -> SeriesValue:
    """Sum the Gauss series 2F1(a, b; c; x) for positive integer parameters.

    Terms are generated by the ratio ``(a+n)(b+n) x / ((c+n)(n+1))``; all of
    them are nonnegative, so summation stops once a term falls below
    ``REL_TOL`` of the running sum while the ratio is below one.

    Raises:
        DomainError: if ``x`` is outside [0, 1) or a parameter is not a
            positive integer.
        ConvergenceError: if ``max_terms`` terms were added without meeting
            the stopping rule.
    """
    for name, val in (("a", a), ("b", b), ("c", c)):
        if int(val) != val or val < 1:
            raise DomainError(f"{name} must be a positive integer, got {val!r}")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x!r}")

    term = 1.0
    total = 1.0
    n = 0
    while True:
        ratio = (a + n) * (b + n) * x / ((c + n) * (n + 1))
        term *= ratio
        total += term
        n += 1
        if term < REL_TOL * total and ratio < 1.0:
            return SeriesValue(total, n + 1, True)
        if n + 1 >= max_terms:
            raise ConvergenceError(
                f"2F1({a},{b};{c};{x}) did not converge in {max_terms} terms", total, n + 1
            )


def jacobi_theta3_zero(q: float) -> SeriesValue:
    """Return theta_3(0, q) = 1 + 2 * sum_{n>=1} q**(n*n)."""
    if not 0.0 <= q < 1.0:
        raise DomainError(f"nome q must lie in [0, 1), got {q!r}")
    total = 1.0
    n = 1
    terms = 1
    while True:
        term = 2.0 * q ** (n * n)
        total += term
        terms += 1
        if term < REL_TOL * total:
            return SeriesValue(total, terms, True)
        n += 1
        if terms >= MAX_TERMS:
            raise ConvergenceError(f"theta3(0,{q}) did not converge", total, terms)


def theta_weights(sigma: float, tol: float = 1e-16) -> np.ndarray:
    """Gaussian photon-number weights ``mu_n ~ exp(-n^2/sigma^2)``, n >= 0.

    Normalised with ``2 / (1 + theta_3(0, exp(-1/sigma^2)))`` and cut once
    a weight drops below ``tol``.
    """
    if sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma!r}")
    q = math.exp(-1.0 / sigma**2)
    norm = 2.0 / (1.0 + jacobi_theta3_zero(q).value)
    weights = []
    n = 0
    while True:
        w = norm * math.exp(-(n * n) / sigma**2)
        if w < tol and n > 0:
            break
        weights.append(w)
        n += 1
    return np.array(weights)


def log_factorial(n):
    """ln(n!) for a nonnegative integer or integer array."""
    arr = np.asarray(n)
    if np.any(arr < 0):
        raise DomainError("log_factorial needs nonnegative arguments")
    if arr.size and arr.max() >= _TABLE_SIZE:
        out = np.vectorize(lambda v: math.lgamma(v + 1.0), otypes=[float])(arr)
    else:
        out = _LOG_FACT[arr]
    return float(out) if np.ndim(out) == 0 else out


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k) from the log-factorial table."""
    if n < 0 or k < 0:
        raise DomainError(f"log_binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}")
    if k == 0 or k == n:
        return 0.0
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k)
