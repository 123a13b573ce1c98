"""Random bipartite expander layers and structural comparison.

Square expanders are built as a union of D pairwise-disjoint random
perfect matchings, so every row and column has degree exactly D; the
matchings are sampled with augmenting-path repair, which always succeeds
because the graph of still-unused cells stays regular.  Rectangular
expanders assign each left node D distinct uniform neighbors, leaving
column degrees variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ArgumentError
from .mask import BinaryMask
from .rng import SplitMix64
from .spectral import spectral_gap
from .verify import (
    EXACT_LIMIT_DEFAULT,
    RegularityReport,
    regularity_report,
)
from .bridge import ExpanderBridgeReport, check_expander_sr_conditions


@dataclass(frozen=True)
class ExpanderSpec:
    n_left: int
    n_right: int
    degree: int
    seed: int

    def __post_init__(self) -> None:
        if self.n_left < 1 or self.n_right < 1:
            raise ArgumentError("part sizes must be positive")
        if not 1 <= self.degree <= self.n_right:
            raise ArgumentError(
                f"degree must be in [1, {self.n_right}], got {self.degree}"
            )


def _disjoint_matching(rng: SplitMix64, allowed: np.ndarray) -> list[int]:
    """Random perfect matching within the allowed cells, greedy with repair.

    ``allowed`` is the boolean matrix of still-free cells; it stays
    k-regular between rounds, so a perfect matching always exists and a
    stuck row can be fixed by an augmenting path.
    """
    n = allowed.shape[0]
    match_row = [-1] * n  # row -> col
    match_col = [-1] * n
    rows = list(range(n))
    rng.shuffle(rows)
    for start in rows:
        free = [j for j in range(n) if allowed[start, j] and match_col[j] < 0]
        if free:
            col = free[rng.below(len(free))]
            match_row[start], match_col[col] = col, start
            continue
        # BFS for an augmenting path alternating free and matched cells
        col_from: dict[int, int] = {}
        frontier = [start]
        end_col = -1
        while frontier and end_col < 0:
            nxt = []
            for r in frontier:
                for j in range(n):
                    if not allowed[r, j] or j in col_from:
                        continue
                    col_from[j] = r
                    if match_col[j] < 0:
                        end_col = j
                        break
                    nxt.append(match_col[j])
                if end_col >= 0:
                    break
            frontier = nxt
        if end_col < 0:
            raise AssertionError("regular remainder graph must admit a matching")
        col = end_col
        while col >= 0:
            r = col_from[col]
            prev_col = match_row[r]
            match_row[r], match_col[col] = col, r
            col = prev_col
    return match_row


def generate_expander(spec: ExpanderSpec) -> BinaryMask:
    """Seed-deterministic random expander mask."""
    rng = SplitMix64(spec.seed)
    bits = np.zeros((spec.n_left, spec.n_right), dtype=np.uint8)
    if spec.n_left == spec.n_right:
        allowed = np.ones((spec.n_left, spec.n_left), dtype=bool)
        for _ in range(spec.degree):
            matching = _disjoint_matching(rng, allowed)
            for row, col in enumerate(matching):
                bits[row, col] = 1
                allowed[row, col] = False
    else:
        for row in range(spec.n_left):
            chosen: set[int] = set()
            while len(chosen) < spec.degree:
                candidate = rng.below(spec.n_right)
                if candidate not in chosen:  # duplicate neighbors are re-drawn
                    chosen.add(candidate)
                    bits[row, candidate] = 1
    return BinaryMask(bits)


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    density: Fraction
    epsilon_star: Fraction
    delta_star: Fraction
    min_row_degree: int
    min_col_degree: int
    spectral_gap: float
    second_singular: float
    super_regular: bool
    method: str


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[ComparisonRow, ...]

    def table(self) -> str:
        header = (
            f"{'label':<16} {'density':>9} {'eps*':>9} {'delta*':>9}"
            f" {'min_deg':>8} {'gamma':>10} {'sr':>4}"
        )
        lines = [header]
        for row in self.rows:
            min_deg = min(row.min_row_degree, row.min_col_degree)
            lines.append(
                f"{row.label:<16} {str(row.density):>9} {str(row.epsilon_star):>9}"
                f" {str(row.delta_star):>9} {min_deg:>8} {row.spectral_gap:>10.6f}"
                f" {'yes' if row.super_regular else 'no':>4}"
            )
        return "\n".join(lines)


def compare(
    masks,
    labels,
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int | None = None,
    seed: int = 0,
) -> ComparisonReport:
    """Tabulate balance and spectral quantities for same-shape masks.

    The super-regularity flag reflects the bridge conditions evaluated at
    the single starting vertex {0}: a mask too sparse to keep the density
    differential inside the single-vertex window is flagged out.
    """
    masks = list(masks)
    labels = list(labels)
    if len(masks) != len(labels):
        raise ArgumentError("one label per mask is required")
    if not masks:
        raise ArgumentError("at least one mask is required")
    shape = masks[0].shape
    for mask in masks[1:]:
        if mask.shape != shape:
            raise ArgumentError(f"mask shapes differ: {mask.shape} vs {shape}")
    if samples is None and min(shape) > exact_limit:
        samples = 2000
    rows = []
    for mask, label in zip(masks, labels):
        report: RegularityReport = regularity_report(
            mask, exact_limit=exact_limit, samples=samples, seed=seed
        )
        if mask.rows == mask.cols:
            bridge: ExpanderBridgeReport = check_expander_sr_conditions(
                mask, (0,), exact_limit=exact_limit, samples=samples, seed=seed
            )
            gamma, lambda2 = bridge.spectral_gap, bridge.second_singular
            flag = bridge.r1_ok and bridge.r2_ok and bridge.r3_ok
        else:
            gamma, lambda2 = spectral_gap(mask)
            flag = False
        rows.append(
            ComparisonRow(
                label=label,
                density=report.density,
                epsilon_star=report.epsilon_star,
                delta_star=report.delta_star,
                min_row_degree=report.min_row_degree,
                min_col_degree=report.min_col_degree,
                spectral_gap=gamma,
                second_singular=lambda2,
                super_regular=flag,
                method=report.method,
            )
        )
    return ComparisonReport(rows=tuple(rows))
