"""Independent brute-force references for the verification kernels.

These deliberately avoid the production code paths: balance parameters
come from explicit enumeration of every subset pair, and the second
singular value comes from a dense symmetric eigensolver on the lifted
adjacency matrix.  They are slow and obviously correct.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np


def _popcount(x: int) -> int:
    return bin(x).count("1")


def epsilon_delta_double_loop(bits: np.ndarray) -> tuple[Fraction, Fraction]:
    """Balance parameter and delta supremum by looping over all subset pairs.

    Square masks only.  The outer loop walks every row subset; for each,
    the edge counts against every column subset are evaluated and folded
    into per-size-pair extremes, from which the minimal feasible epsilon
    is read off interval by interval.
    """
    bits = np.asarray(bits, dtype=np.int64)
    m, c = bits.shape
    assert m == c, "oracle handles square masks only"
    total = int(bits.sum())

    y_masks = np.arange(1, 1 << m, dtype=np.int64)
    y_members = ((y_masks[:, None] >> np.arange(m)[None, :]) & 1).astype(np.int64)
    y_sizes = y_members.sum(axis=1)
    order = np.argsort(y_sizes, kind="stable")
    sorted_sizes = y_sizes[order]
    starts = np.searchsorted(sorted_sizes, np.arange(1, m + 1))
    huge = np.iinfo(np.int64).max

    e_min = np.full((m + 1, m + 1), huge, dtype=np.int64)
    e_max = np.full((m + 1, m + 1), -1, dtype=np.int64)
    for x_mask in range(1, 1 << m):
        rows = [i for i in range(m) if (x_mask >> i) & 1]
        colsum = bits[rows].sum(axis=0)
        a = len(rows)
        evals = (y_members @ colsum)[order]
        e_min[a, 1:] = np.minimum(e_min[a, 1:], np.minimum.reduceat(evals, starts))
        e_max[a, 1:] = np.maximum(e_max[a, 1:], np.maximum.reduceat(evals, starts))

    dens = Fraction(total, m * m)
    dev = {}
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            lo = Fraction(int(e_min[a, b]), a * b)
            hi = Fraction(int(e_max[a, b]), a * b)
            dev[(a, b)] = max(hi - dens, dens - lo)

    # interval scan: on [t/m, (t+1)/m) the qualifying pairs have both sizes > t
    candidates = []
    for t in range(m + 1):
        worst = max((dev[(a, b)] for a in range(t + 1, m + 1) for b in range(t + 1, m + 1)),
                    default=Fraction(0))
        left = Fraction(t, m)
        if worst <= left:
            candidates.append(left)
        elif worst < Fraction(t + 1, m):
            candidates.append(worst)
    eps = min(candidates)

    delta = Fraction(int(min(bits.sum(axis=1).min(), bits.sum(axis=0).min())), m)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a > eps * m and b > eps * m:
                delta = min(delta, Fraction(int(e_min[a, b]), a * b))
    return eps, delta


def epsilon_delta_tiny(bits: np.ndarray) -> tuple[Fraction, Fraction]:
    """Pure-Fraction reference checking every candidate against every pair.

    Exponential in every direction; keep sides at 5 or below.
    """
    bits = np.asarray(bits, dtype=np.int64)
    m, c = bits.shape
    assert m == c <= 5
    idx = range(m)
    pairs = []
    dens = Fraction(int(bits.sum()), m * m)
    for a in range(1, m + 1):
        for x in combinations(idx, a):
            for b in range(1, m + 1):
                for y in combinations(idx, b):
                    e = int(bits[np.ix_(x, y)].sum())
                    pairs.append((a, b, e, abs(Fraction(e, a * b) - dens)))
    candidates = sorted(
        {p[3] for p in pairs} | {Fraction(t, m) for t in range(m + 1)}
    )
    eps = next(
        cand
        for cand in candidates
        if all(dev <= cand for a, b, _, dev in pairs if a > cand * m and b > cand * m)
    )
    delta = Fraction(int(min(bits.sum(axis=1).min(), bits.sum(axis=0).min())), m)
    for a, b, e, _ in pairs:
        if a > eps * m and b > eps * m:
            delta = min(delta, Fraction(e, a * b))
    return eps, delta


def lambda2_eigensolver(bits: np.ndarray) -> float:
    """Second singular value read from the dense spectrum of the adjacency."""
    bits = np.asarray(bits, dtype=np.float64)
    r, c = bits.shape
    adjacency = np.zeros((r + c, r + c))
    adjacency[:r, r:] = bits
    adjacency[r:, :r] = bits.T
    magnitudes = np.sort(np.abs(np.linalg.eigvalsh(adjacency)))[::-1]
    return float(magnitudes[2])
