"""Bridge between expander requirements and super-regularity.

For a square mask and a seed set S of left vertices with neighborhood
N(S), the three layer requirements are evaluated against the mask's own
balance report:

* R1: |S| and |N(S)| both exceed eps*n for the reported eps.
* R2: an eps window exists for the single-seed density differential,
  i.e. D_min * |1/|N(S)| - 1/n|  <  |S|/n  <  1/2.
* R3: every vertex keeps degree at least delta*n for the reported delta.

The report also carries both ends of that window: the exact rational
lower bound and the spectral upper bound (1-gamma)*sqrt(|S||N(S)|) /
(|S||N(S)|), the latter a float because it derives from the iterative
gap computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import ArgumentError, DegenerateSubsetError
from .mask import BinaryMask
from .spectral import spectral_gap
from .verify import EXACT_LIMIT_DEFAULT, regularity_report


@dataclass(frozen=True)
class ExpanderBridgeReport:
    r1_ok: bool
    r2_ok: bool
    r3_ok: bool
    epsilon_bound_low: Fraction
    epsilon_bound_high: float
    spectral_gap: float
    second_singular: float
    degree_h: int
    epsilon_star: Fraction
    delta_star: Fraction
    s_size: int
    neighborhood_size: int

    @property
    def all_ok(self) -> bool:
        return self.r1_ok and self.r2_ok and self.r3_ok


def neighborhood(mask: BinaryMask, s: Iterable[int]) -> tuple[int, ...]:
    """Columns adjacent to at least one row of ``s``."""
    rows = tuple(sorted(set(int(i) for i in s)))
    if not rows:
        raise ArgumentError("seed subset must be non-empty")
    if rows[0] < 0 or rows[-1] >= mask.rows:
        raise ArgumentError(f"seed indices must lie in [0, {mask.rows})")
    hit = mask.bits[list(rows)].any(axis=0)
    return tuple(int(j) for j in np.nonzero(hit)[0])


def check_expander_sr_conditions(
    mask: BinaryMask,
    s: Iterable[int],
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int | None = None,
    seed: int = 0,
) -> ExpanderBridgeReport:
    """Evaluate R1-R3 and the eps window bounds for the seed set ``s``."""
    if mask.rows != mask.cols:
        raise ArgumentError(
            f"bridge conditions are defined for square masks, got {mask.rows}x{mask.cols}"
        )
    n = mask.rows
    rows = tuple(sorted(set(int(i) for i in s)))
    hood = neighborhood(mask, rows)
    if not hood:
        raise DegenerateSubsetError("seed subset has no neighbors")

    if min(mask.rows, mask.cols) > exact_limit and samples is None:
        samples = 2000
    report = regularity_report(mask, exact_limit=exact_limit, samples=samples, seed=seed)
    eps, delta = report.epsilon_star, report.delta_star
    d_min = min(report.min_row_degree, report.min_col_degree)

    bound_low = d_min * abs(Fraction(1, len(hood)) - Fraction(1, n))
    gamma, lambda2 = spectral_gap(mask)
    area = len(rows) * len(hood)
    bound_high = (1.0 - gamma) * math.sqrt(area) / area

    r1 = len(rows) > eps * n and len(hood) > eps * n
    r2 = bound_low < Fraction(len(rows), n) < Fraction(1, 2)
    r3 = report.min_row_degree >= delta * n and report.min_col_degree >= delta * n
    degrees = mask.row_degrees
    return ExpanderBridgeReport(
        r1_ok=bool(r1),
        r2_ok=bool(r2),
        r3_ok=bool(r3),
        epsilon_bound_low=bound_low,
        epsilon_bound_high=bound_high,
        spectral_gap=gamma,
        second_singular=lambda2,
        degree_h=int(degrees.max()),
        epsilon_star=eps,
        delta_star=delta,
        s_size=len(rows),
        neighborhood_size=len(hood),
    )
