"""Independent reference implementations used only by the tests.

Each oracle takes a different route from the library code: dense operator
algebra instead of closed-form coefficients, matrix exponentials instead
of per-sector rotations, exact rationals instead of log-space sums.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize_scalar

# --- special functions -----------------------------------------------------

def hyp2f1_mp(a, b, c, x) -> float:
    return float(mpmath.hyp2f1(a, b, c, x))


def hyp2f1_exact_partial(a: int, b: int, c: int, x: Fraction, terms: int) -> Fraction:
    """Exact rational partial sum of the Gauss series."""
    total, term = Fraction(0), Fraction(1)
    for n in range(terms):
        total += term
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * x
    return total


def theta3_mp(q: float) -> float:
    return float(mpmath.jtheta(3, 0, q))


# --- dense two-mode operator algebra --------------------------------------

def annihilation(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim)), 1)


def tmsv_dense(x: float, dim: int) -> np.ndarray:
    """Idler-major TMSV amplitudes on a dim x dim box (unnormalised tail cut)."""
    psi = np.zeros((dim, dim))
    for n in range(dim):
        psi[n, n] = math.sqrt(1 - x) * x ** (n / 2)
    return psi


def probe_dense(op: str, k: int, l: int, x: float, dim: int = 90) -> np.ndarray:
    """Apply ladder operators to a TMSV on a large box and renormalise.

    Returns a (dim, dim) array indexed [idler, signal].
    """
    a = annihilation(dim)
    ad = a.T
    psi = tmsv_dense(x, dim)
    idler_op = {"ADD": ad, "SUB": a}
    if op == "TMSV":
        pass
    elif op == "ADD_BOTH":
        psi = np.linalg.matrix_power(ad, k) @ psi @ np.linalg.matrix_power(ad, l).T
    elif op == "SUB_BOTH":
        psi = np.linalg.matrix_power(a, k) @ psi @ np.linalg.matrix_power(a, l).T
    elif op == "ADD_IDLER":
        psi = np.linalg.matrix_power(idler_op["ADD"], k) @ psi
    elif op == "SUB_IDLER":
        psi = np.linalg.matrix_power(idler_op["SUB"], k) @ psi
    elif op == "ADD_SIGNAL":
        psi = psi @ np.linalg.matrix_power(ad, l).T
    elif op == "SUB_SIGNAL":
        psi = psi @ np.linalg.matrix_power(a, l).T
    else:
        raise ValueError(op)
    return psi / np.linalg.norm(psi)


def probe_on_grid(v, dim: int) -> np.ndarray:
    """Library FockVector scattered onto a (dim, dim) [idler, signal] grid."""
    out = np.zeros((dim, dim))
    out[v.idler_indices, v.signal_indices] = v.coeffs
    return out


# --- beam splitter and channel --------------------------------------------

def beam_splitter_unitary(dim: int, kappa: float) -> np.ndarray:
    """``exp[theta (a b^dag - a^dag b)]`` on a (dim x dim) box, modes (a, b)
    with ``sin theta = sqrt(kappa)``; index ``a * dim + b``.

    Exact on the subspace with total photon number below ``dim``.
    """
    a = annihilation(dim)
    eye = np.eye(dim)
    A = np.kron(a, eye)
    B = np.kron(eye, a)
    theta = math.asin(math.sqrt(kappa))
    gen = A @ B.T - A.T @ B
    return expm(theta * gen)


def rho1_three_mode(psi: np.ndarray, kappa: float, n_bath: float, m_max: int, ds: int) -> np.ndarray:
    """Target-present state by brute force.

    ``psi`` is an [idler, signal] amplitude array. The signal meets each bath
    Fock state |m> (thermal weight) on the beam splitter; the detector keeps
    the bath-side output port (sqrt(kappa) of the signal) and the other port
    is traced out. Output is idler-major with signal dimension ``ds``.
    """
    di, s_in = psi.shape
    box = s_in + m_max + 1
    U = beam_splitter_unitary(box, kappa)
    out = np.zeros((di * ds, di * ds))
    for m in range(m_max + 1):
        pm = n_bath**m / (1 + n_bath) ** (m + 1) if n_bath > 0 else float(m == 0)
        if pm == 0:
            continue
        # state in idler x (signal-port, bath-port)
        full = np.zeros((di, box, box))
        full[:, :s_in, m] = psi
        evolved = np.einsum("pq,iq->ip", U, full.reshape(di, box * box)).reshape(di, box, box)
        # keep port b (index 2), trace port a (index 1)
        kept = evolved[:, :, :ds]  # [idler, discarded, detected]
        rho = np.einsum("iaj,kal->ijkl", kept, kept).reshape(di * ds, di * ds)
        out += pm * rho
    return out


# --- Chernoff bound -------------------------------------------------------

def _mat_power(rho: np.ndarray, s: float) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    top = w.max()
    w = np.where(w > 1e-14 * top, w, 0.0)
    ws = np.where(w > 0, np.power(np.where(w > 0, w, 1.0), s), 0.0)
    return (v * ws) @ v.T


def overlap_dense(rho0: np.ndarray, rho1: np.ndarray, alpha: float) -> float:
    return float(np.trace(_mat_power(rho0, alpha) @ _mat_power(rho1, 1 - alpha)))


def chernoff_brute(rho0: np.ndarray, rho1: np.ndarray, grid: int = 2001) -> tuple[float, float]:
    """Dense alpha grid followed by a bounded scalar polish."""
    alphas = np.linspace(0, 1, grid)
    vals = np.array([overlap_dense(rho0, rho1, a) for a in alphas])
    i = int(np.argmin(vals))
    lo, hi = alphas[max(i - 1, 0)], alphas[min(i + 1, grid - 1)]
    res = minimize_scalar(lambda a: overlap_dense(rho0, rho1, a), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-10})
    if res.fun < vals[i]:
        return float(res.fun), float(res.x)
    return float(vals[i]), float(alphas[i])


def chernoff_diag_brute(p: np.ndarray, q: np.ndarray, grid: int = 100001) -> float:
    """Classical Chernoff coefficient of two distributions on a fine grid."""
    alphas = np.linspace(0, 1, grid)[:, None]
    mask = (p > 0) & (q > 0)
    vals = (p[mask] ** alphas * q[mask] ** (1 - alphas)).sum(axis=1)
    return float(vals.min())
