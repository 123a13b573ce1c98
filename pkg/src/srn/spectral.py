"""Spectral gap of a mask via power iteration with deflation.

The gap is gamma = 1 - lambda2/H, where lambda2 is the second-largest
singular value of the biadjacency matrix and H its uniform row degree
(the maximum degree is used, with a warning, when degrees are not
uniform).  Singular values are extracted one at a time: power iteration
on the Gram matrix finds the leading singular triple, the rank-one
component is subtracted, and the iteration repeats.  Iterations stop
when the eigenvalue residual of the Gram matrix drops below the
requested absolute tolerance, which bounds the error of the estimate
for symmetric matrices.  Start vectors come from a fixed seeded stream
and are re-drawn if one happens to land in the null space, so results
are deterministic.
"""

from __future__ import annotations

import warnings

import numpy as np

from .errors import SpectrumError
from .mask import BinaryMask
from .rng import SplitMix64

_START_SEED = 0x53504543


def _draw_unit(rng: SplitMix64, n: int) -> np.ndarray:
    v = np.array([rng.below(1 << 53) / float(1 << 53) - 0.5 for _ in range(n)])
    return v / np.linalg.norm(v)


def _top_singular(matrix: np.ndarray, tol: float, max_iter: int, rng: SplitMix64) -> float:
    """Leading singular value via power iteration on the Gram matrix."""
    gram = matrix.T @ matrix
    if np.linalg.norm(gram) <= tol:
        return 0.0
    v = _draw_unit(rng, gram.shape[0])
    sigma_sq = 0.0
    for _ in range(max_iter):
        w = gram @ v
        norm = np.linalg.norm(w)
        if norm <= 1e-30:
            # start vector fell in the null space of a non-zero matrix
            v = _draw_unit(rng, gram.shape[0])
            continue
        v = w / norm
        sigma_sq = float(v @ (gram @ v))
        residual = np.linalg.norm(gram @ v - sigma_sq * v)
        if residual <= tol * max(1.0, sigma_sq):
            break
    return float(np.sqrt(max(sigma_sq, 0.0)))


def spectral_gap(
    mask: BinaryMask, *, tol: float = 1e-9, max_iter: int = 500_000
) -> tuple[float, float]:
    """Return (gamma, lambda2) for the mask's bipartite graph."""
    if mask.edge_count == 0:
        raise SpectrumError("the spectrum of an all-zero mask is undefined")
    degrees = mask.row_degrees
    if degrees.min() != degrees.max():
        warnings.warn(
            "row degrees are not uniform; using the maximum degree for the gap",
            stacklevel=2,
        )
    h = int(degrees.max())
    matrix = mask.bits.astype(np.float64)
    inner_tol = min(tol, 1e-10)
    rng = SplitMix64(_START_SEED)

    gram = matrix.T @ matrix
    v = _draw_unit(rng, matrix.shape[1])
    sigma_sq = 0.0
    for _ in range(max_iter):
        w = gram @ v
        norm = np.linalg.norm(w)
        if norm <= 1e-30:
            v = _draw_unit(rng, matrix.shape[1])
            continue
        v = w / norm
        sigma_sq = float(v @ (gram @ v))
        residual = np.linalg.norm(gram @ v - sigma_sq * v)
        if residual <= inner_tol * max(1.0, sigma_sq):
            break
    sigma1 = float(np.sqrt(max(sigma_sq, 0.0)))
    if sigma1 <= 0.0:
        raise SpectrumError("leading singular value vanished unexpectedly")

    u1 = matrix @ v / sigma1
    deflated = matrix - sigma1 * np.outer(u1, v)
    lambda2 = _top_singular(deflated, inner_tol, max_iter, rng)
    lambda2 = min(max(lambda2, 0.0), sigma1)
    return 1.0 - lambda2 / h, lambda2
