"""Exact and sampled balance verification.

For a mask Q with density d, the balance parameter epsilon* is the
smallest value in the finite candidate set (all subset-pair density
deviations plus the size thresholds t/rows and t/cols) such that every
subset pair (X, Y) with |X| > eps*rows and |Y| > eps*cols deviates from
d by at most eps.  Feasibility is monotone in eps, so a binary search
over the sorted candidates finds the minimum.

The exact kernel never materializes all subset *pairs*: it enumerates
row subsets only and reads off, for each subset size pair (a, b), the
extreme edge counts over column subsets from sorted column-sum prefix
sums.  Those per-size extremes determine every downstream quantity
(epsilon*, delta*, the strict super-regularity check) and allow witness
recovery.  All densities and thresholds are exact rationals; ties in
witness selection break toward the lexicographically smallest subset
bitmasks, which keeps results bit-identical regardless of how the
enumeration is chunked across threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

import numpy as np

from .errors import ArgumentError, SizeLimitError
from .mask import BinaryMask
from .rng import SplitMix64

EXACT_LIMIT_DEFAULT = 14
_CHUNK_BITS = 12


@dataclass(frozen=True)
class SubsetWitness:
    """A subset pair exhibiting an extreme density."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    subset_density: Fraction
    deviation: Fraction


@dataclass(frozen=True)
class RegularityReport:
    density: Fraction
    epsilon_star: Fraction
    delta_star: Fraction
    min_row_degree: int
    min_col_degree: int
    method: Literal["exact", "sampled"]
    sample_count: int
    worst_witness: SubsetWitness | None


def density(mask: BinaryMask) -> Fraction:
    return mask.density


def _clean_subset(indices: Iterable[int], bound: int, what: str) -> tuple[int, ...]:
    subset = tuple(sorted(set(int(i) for i in indices)))
    if not subset:
        raise ArgumentError(f"{what} subset must be non-empty")
    if subset[0] < 0 or subset[-1] >= bound:
        raise ArgumentError(f"{what} indices must lie in [0, {bound})")
    return subset


def subset_density(mask: BinaryMask, x: Iterable[int], y: Iterable[int]) -> Fraction:
    x = _clean_subset(x, mask.rows, "row")
    y = _clean_subset(y, mask.cols, "column")
    edges = int(mask.bits[np.ix_(x, y)].sum())
    return Fraction(edges, len(x) * len(y))


def to_adjacency(mask: BinaryMask) -> np.ndarray:
    """Symmetric (rows+cols)-sided 0/1 adjacency with the mask as off-diagonal block."""
    r, c = mask.rows, mask.cols
    adj = np.zeros((r + c, r + c), dtype=np.uint8)
    adj[:r, r:] = mask.bits
    adj[r:, :r] = mask.bits.T
    return adj


# ---------------------------------------------------------------------------
# exact subset-extreme tables


def _thread_cap() -> int:
    raw = os.environ.get("SRN_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    if cap == 0:
        return os.cpu_count() or 1
    return max(1, cap)


def _chunk_extremes(bits: np.ndarray, lo: int, hi: int) -> tuple[np.ndarray, ...]:
    """Per-size extreme edge counts over subsets with bitmask in [lo, hi)."""
    n, c = bits.shape
    masks = np.arange(lo, hi, dtype=np.int64)
    members = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
    sizes = members.sum(axis=1)
    colsums = members @ bits.astype(np.int64)
    prefix = np.concatenate(
        [np.zeros((len(masks), 1), dtype=np.int64), np.sort(colsums, axis=1).cumsum(axis=1)],
        axis=1,
    )
    totals = prefix[:, -1]

    e_min = np.full((n + 1, c + 1), np.iinfo(np.int64).max, dtype=np.int64)
    e_max = np.full((n + 1, c + 1), -1, dtype=np.int64)
    arg_min = np.zeros((n + 1, c + 1), dtype=np.int64)
    arg_max = np.zeros((n + 1, c + 1), dtype=np.int64)
    for a in range(1, n + 1):
        group = np.nonzero(sizes == a)[0]
        if len(group) == 0:
            continue
        # smallest b column-sums give the min; complement of the smallest c-b gives the max
        mins = prefix[group, 1 : c + 1]
        maxs = (totals[group, None] - prefix[group, : c][:, ::-1])
        lo_idx = mins.argmin(axis=0)
        hi_idx = maxs.argmax(axis=0)
        e_min[a, 1:] = mins[lo_idx, np.arange(c)]
        e_max[a, 1:] = maxs[hi_idx, np.arange(c)]
        arg_min[a, 1:] = masks[group[lo_idx]]
        arg_max[a, 1:] = masks[group[hi_idx]]
    return e_min, e_max, arg_min, arg_max


class _ExactCells:
    """Extreme edge counts e_min/e_max for every subset size pair (a, b).

    Enumerates subsets of the smaller side (transposing if needed) and
    keeps, per size pair, the extreme counts plus the lexicographically
    smallest subset bitmask achieving each extreme.
    """

    def __init__(self, mask: BinaryMask, exact_limit: int = EXACT_LIMIT_DEFAULT) -> None:
        self.transposed = mask.cols < mask.rows
        work = mask.transpose() if self.transposed else mask
        n = work.rows
        if n > exact_limit:
            raise SizeLimitError(
                f"exact enumeration over {n} rows exceeds the limit of {exact_limit};"
                " use the sampled variant"
            )
        self.mask = mask
        self._work_bits = work.bits
        self.n, self.c = work.rows, work.cols
        self.d = mask.density
        chunk = 1 << _CHUNK_BITS
        spans = [(lo, min(lo + chunk, 1 << n)) for lo in range(1, 1 << n, chunk)]
        cap = min(_thread_cap(), len(spans))
        if cap > 1:
            with ThreadPoolExecutor(max_workers=cap) as pool:
                parts = list(pool.map(lambda s: _chunk_extremes(self._work_bits, *s), spans))
        else:
            parts = [_chunk_extremes(self._work_bits, *span) for span in spans]
        e_min, e_max, arg_min, arg_max = parts[0]
        for p_min, p_max, p_amin, p_amax in parts[1:]:
            better = p_min < e_min  # ties keep the earlier (smaller) bitmask
            arg_min = np.where(better, p_amin, arg_min)
            e_min = np.where(better, p_min, e_min)
            better = p_max > e_max
            arg_max = np.where(better, p_amax, arg_max)
            e_max = np.where(better, p_max, e_max)
        self._e_min, self._e_max = e_min, e_max
        self._arg_min, self._arg_max = arg_min, arg_max

    @property
    def sizes(self) -> tuple[int, int]:
        """(row-subset sizes, col-subset sizes) in the original orientation."""
        return (self.c, self.n) if self.transposed else (self.n, self.c)

    def _orient(self, a: int, b: int) -> tuple[int, int]:
        return (b, a) if self.transposed else (a, b)

    def e_min(self, a: int, b: int) -> int:
        ea, eb = self._orient(a, b)
        return int(self._e_min[ea, eb])

    def e_max(self, a: int, b: int) -> int:
        ea, eb = self._orient(a, b)
        return int(self._e_max[ea, eb])

    def witness_pair(self, a: int, b: int, side: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Recover the lexicographically-first subset pair achieving an extreme."""
        ea, eb = self._orient(a, b)
        subset_mask = int((self._arg_min if side == "min" else self._arg_max)[ea, eb])
        rows = tuple(i for i in range(self.n) if subset_mask >> i & 1)
        colsums = self._work_bits[list(rows)].sum(axis=0).astype(np.int64)
        if side == "min":
            order = np.lexsort((np.arange(self.c), colsums))
        else:
            order = np.lexsort((np.arange(self.c), -colsums))
        cols = tuple(sorted(int(j) for j in order[:eb]))
        return (cols, rows) if self.transposed else (rows, cols)


class _SampledCells:
    """The same per-size-pair interface, restricted to sampled subset pairs.

    Sizes are drawn uniformly in [1, side], membership uniformly at
    random; for each size pair the extreme counts over the drawn pairs
    are kept, earliest draw winning ties.
    """

    def __init__(self, mask: BinaryMask, samples: int, seed: int) -> None:
        if samples < 1:
            raise ArgumentError(f"sample count must be positive, got {samples}")
        self.mask = mask
        self.d = mask.density
        self.sample_count = samples
        rng = SplitMix64(seed)
        mins: dict[tuple[int, int], tuple[int, tuple, tuple]] = {}
        maxs: dict[tuple[int, int], tuple[int, tuple, tuple]] = {}
        bits = mask.bits
        for _ in range(samples):
            a = 1 + rng.below(mask.rows)
            b = 1 + rng.below(mask.cols)
            x = rng.subset(mask.rows, a)
            y = rng.subset(mask.cols, b)
            e = int(bits[np.ix_(x, y)].sum())
            key = (a, b)
            if key not in mins or e < mins[key][0]:
                mins[key] = (e, x, y)
            if key not in maxs or e > maxs[key][0]:
                maxs[key] = (e, x, y)
        self._mins, self._maxs = mins, maxs

    @property
    def cells(self) -> list[tuple[int, int]]:
        return sorted(self._mins)

    def e_min(self, a: int, b: int) -> int:
        return self._mins[(a, b)][0]

    def e_max(self, a: int, b: int) -> int:
        return self._maxs[(a, b)][0]

    def witness_pair(self, a: int, b: int, side: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
        table = self._mins if side == "min" else self._maxs
        _, x, y = table[(a, b)]
        return x, y


def _cell_list(cells) -> list[tuple[int, int]]:
    if isinstance(cells, _ExactCells):
        rows, cols = cells.sizes
        return [(a, b) for a in range(1, rows + 1) for b in range(1, cols + 1)]
    return cells.cells


# ---------------------------------------------------------------------------
# epsilon* search


def _deviations(cells) -> dict[tuple[int, int], Fraction]:
    d = cells.d
    out = {}
    for a, b in _cell_list(cells):
        lo = Fraction(cells.e_min(a, b), a * b)
        hi = Fraction(cells.e_max(a, b), a * b)
        out[(a, b)] = max(hi - d, d - lo)
    return out

def _feasible(eps: Fraction, devs, rows: int, cols: int) -> bool:
    for (a, b), dev in devs.items():
        if a > eps * rows and b > eps * cols and dev > eps:
            return False
    return True


def _min_feasible_epsilon(devs, rows: int, cols: int) -> tuple[Fraction, Fraction | None]:
    """Smallest feasible candidate, plus the largest candidate below it."""
    candidates = set(devs.values())
    candidates.update(Fraction(t, rows) for t in range(rows + 1))
    candidates.update(Fraction(t, cols) for t in range(cols + 1))
    ordered = sorted(candidates)
    lo, hi = 0, len(ordered) - 1
    # eps = 1 is always feasible: no subset is larger than its side
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(ordered[mid], devs, rows, cols):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo], ordered[lo - 1] if lo else None


def _bitmask(indices: tuple[int, ...]) -> int:
    return sum(1 << i for i in indices)


def _forcing_witness(cells, devs, eps_prev: Fraction, rows: int, cols: int) -> SubsetWitness | None:
    """Worst qualifying pair at ``eps_prev`` (the candidate just below epsilon*).

    Among pairs of equal deviation the lexicographically smallest
    (X, Y) bitmask pair wins, independent of enumeration chunking.
    """
    worst: Fraction | None = None
    for (a, b), dev in devs.items():
        if a > eps_prev * rows and b > eps_prev * cols:
            if worst is None or dev > worst:
                worst = dev
    if worst is None:
        return None
    best: tuple[tuple[int, int], SubsetWitness] | None = None
    d = cells.d
    for (a, b), dev in devs.items():
        if dev != worst or not (a > eps_prev * rows and b > eps_prev * cols):
            continue
        hi = Fraction(cells.e_max(a, b), a * b) - d
        side = "max" if hi == dev else "min"
        x, y = cells.witness_pair(a, b, side)
        sub = Fraction(cells.e_max(a, b) if side == "max" else cells.e_min(a, b), a * b)
        key = (_bitmask(x), _bitmask(y))
        if best is None or key < best[0]:
            best = (key, SubsetWitness(x=x, y=y, subset_density=sub, deviation=dev))
    return best[1] if best is not None else None


def _epsilon_star(cells) -> tuple[Fraction, SubsetWitness | None]:
    rows, cols = cells.mask.rows, cells.mask.cols
    devs = _deviations(cells)
    eps, prev = _min_feasible_epsilon(devs, rows, cols)
    witness = _forcing_witness(cells, devs, prev if prev is not None else eps, rows, cols)
    return eps, witness


def epsilon_star_exact(
    mask: BinaryMask, *, exact_limit: int = EXACT_LIMIT_DEFAULT
) -> tuple[Fraction, SubsetWitness | None]:
    """Exact balance parameter of a square mask, with its forcing witness."""
    if mask.rows != mask.cols:
        raise ArgumentError(
            f"exact balance is defined for square masks, got {mask.rows}x{mask.cols};"
            " build a report for the rectangular generalization"
        )
    return _epsilon_star(_ExactCells(mask, exact_limit))


def epsilon_star_sampled(
    mask: BinaryMask, samples: int, seed: int
) -> tuple[Fraction, SubsetWitness | None]:
    """Lower bound on the balance parameter from sampled subset pairs."""
    return _epsilon_star(_SampledCells(mask, samples, seed))


# ---------------------------------------------------------------------------
# delta* and the strict super-regularity check


def _degree_bounds(mask: BinaryMask) -> tuple[Fraction, Fraction]:
    return (
        Fraction(int(mask.row_degrees.min()), mask.cols),
        Fraction(int(mask.col_degrees.min()), mask.rows),
    )


def _cells_for(
    mask: BinaryMask, exact_limit: int, samples: int | None, seed: int
):
    if samples is not None:
        return _SampledCells(mask, samples, seed)
    return _ExactCells(mask, exact_limit)


def delta_star(
    mask: BinaryMask,
    epsilon: Fraction,
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int | None = None,
    seed: int = 0,
) -> Fraction:
    """Supremum delta for the lower-density and minimum-degree conditions.

    Every delta strictly below the returned value satisfies, for all
    pairs qualifying at ``epsilon``, e(X,Y) > delta*|X||Y| as well as the
    strict minimum-degree bounds.
    """
    epsilon = Fraction(epsilon)
    cells = _cells_for(mask, exact_limit, samples, seed)
    rows, cols = mask.rows, mask.cols
    best = min(_degree_bounds(mask))
    for a, b in _cell_list(cells):
        if a > epsilon * rows and b > epsilon * cols:
            best = min(best, Fraction(cells.e_min(a, b), a * b))
    return best


def check_super_regular(
    mask: BinaryMask,
    epsilon,
    delta,
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int | None = None,
    seed: int = 0,
) -> tuple[bool, SubsetWitness | None]:
    """Strict check of the balance and lower-bound conditions at (epsilon, delta).

    Degrees are checked first (rows, then columns, ascending index), then
    size pairs in ascending (a, b) order: every qualifying pair must
    deviate from the density by strictly less than epsilon and carry
    strictly more than delta*|X||Y| edges.  On failure the first
    violation in that order is returned as a witness.
    """
    epsilon, delta = Fraction(epsilon), Fraction(delta)
    d = mask.density
    rows, cols = mask.rows, mask.cols
    for i, deg in enumerate(mask.row_degrees.tolist()):
        if not deg > delta * cols:
            sub = Fraction(deg, cols)
            return False, SubsetWitness((i,), tuple(range(cols)), sub, abs(sub - d))
    for j, deg in enumerate(mask.col_degrees.tolist()):
        if not deg > delta * rows:
            sub = Fraction(deg, rows)
            return False, SubsetWitness(tuple(range(rows)), (j,), sub, abs(sub - d))
    cells = _cells_for(mask, exact_limit, samples, seed)
    for a, b in sorted(_cell_list(cells)):
        if not (a > epsilon * rows and b > epsilon * cols):
            continue
        lo = Fraction(cells.e_min(a, b), a * b)
        hi = Fraction(cells.e_max(a, b), a * b)
        dev_lo, dev_hi = d - lo, hi - d
        if max(dev_lo, dev_hi) >= epsilon:
            side = "min" if dev_lo >= dev_hi else "max"
            x, y = cells.witness_pair(a, b, side)
            sub = lo if side == "min" else hi
            return False, SubsetWitness(x, y, sub, abs(sub - d))
        if not cells.e_min(a, b) > delta * a * b:
            x, y = cells.witness_pair(a, b, "min")
            return False, SubsetWitness(x, y, lo, abs(lo - d))
    return True, None


def regularity_report(
    mask: BinaryMask,
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int | None = None,
    seed: int = 0,
) -> RegularityReport:
    """Density, epsilon*, delta* and degree summary, exact or sampled.

    Rectangular masks are handled by replacing the single side with the
    respective side in the qualification thresholds.
    """
    cells = _cells_for(mask, exact_limit, samples, seed)
    eps, witness = _epsilon_star(cells)
    rows, cols = mask.rows, mask.cols
    best = min(_degree_bounds(mask))
    for a, b in _cell_list(cells):
        if a > eps * rows and b > eps * cols:
            best = min(best, Fraction(cells.e_min(a, b), a * b))
    return RegularityReport(
        density=mask.density,
        epsilon_star=eps,
        delta_star=best,
        min_row_degree=int(mask.row_degrees.min()),
        min_col_degree=int(mask.col_degrees.min()),
        method="sampled" if samples is not None else "exact",
        sample_count=samples or 0,
        worst_witness=witness,
    )
