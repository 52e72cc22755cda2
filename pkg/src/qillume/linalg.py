"""Block-aware Hermitian eigendecomposition helpers.

Density matrices produced by the thermal-loss channel are block diagonal
after a permutation (photon-number difference sectors), so everything that
needs a spectrum works on connected components of the sparsity pattern.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NumericalIntegrityError

log = logging.getLogger(__name__)

CLAMP_TOL = 1e-10
ABORT_TOL = 1e-8


def block_partition(*mats: np.ndarray) -> list[np.ndarray]:
    """Index sets of the connected components of the union sparsity pattern.

    Indices whose rows and columns are identically zero in every matrix are
    dropped; they carry no weight.
    """
    n = mats[0].shape[0]
    pattern = np.zeros((n, n), dtype=bool)
    for m in mats:
        pattern |= m != 0
    active = np.flatnonzero(pattern.any(axis=1))
    if active.size == 0:
        return []
    sub = pattern[np.ix_(active, active)]
    ncomp, labels = connected_components(csr_matrix(sub), directed=False)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    return [active[g] for g in np.split(order, bounds)]


@dataclass(frozen=True)
class BlockSpectrum:
    """Eigenpairs of one diagonal block."""

    index: np.ndarray
    values: np.ndarray
    vectors: np.ndarray


def clamp_spectrum(values: np.ndarray, what: str = "matrix") -> np.ndarray:
    """Clamp round-off negativity; abort on structural negativity."""
    lo = values.min() if values.size else 0.0
    if lo < -ABORT_TOL:
        raise NumericalIntegrityError(f"{what} has eigenvalue {lo:.3e} < -{ABORT_TOL:g}")
    if lo < -CLAMP_TOL:
        log.warning("%s: clamping eigenvalue %.3e to zero", what, lo)
    return np.where(values < 0, 0.0, values)


def block_eigh(mat: np.ndarray, blocks: list[np.ndarray], what: str = "matrix") -> list[BlockSpectrum]:
    if not np.all(np.isfinite(mat)):
        raise NumericalIntegrityError(f"{what} contains non-finite entries")
    out = []
    for idx in blocks:
        sub = mat[np.ix_(idx, idx)]
        if idx.size == 1:
            vals, vecs = sub[0].copy(), np.ones((1, 1))
        else:
            vals, vecs = np.linalg.eigh(sub)
        out.append(BlockSpectrum(idx, clamp_spectrum(vals, what), vecs))
    return out


def eigvalsh_blocks(mat: np.ndarray, blocks: list[np.ndarray] | None = None) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, exploiting block structure."""
    if blocks is None:
        blocks = block_partition(mat)
    vals = [np.linalg.eigvalsh(mat[np.ix_(b, b)]) for b in blocks]
    covered = sum(b.size for b in blocks)
    vals.append(np.zeros(mat.shape[0] - covered))
    return np.concatenate(vals) if vals else np.zeros(0)
