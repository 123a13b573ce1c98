"""Deterministic construction of base masks from wrap-around full diagonals.

A level-k base mask has side m = 2**k and is a union of *full diagonals*:
wrap-around diagonals placing exactly one edge in every row and column.
Cell (i, j) lies on the diagonal with offset d when i = j + d (mod m).
For m >= 4 the four canonical diagonals sit at offsets 0, m/4, m/2 and
3m/4, indexed 1..4; at m = 2 only offsets 0 (index 1) and 1 (index 3)
exist, and at m = 1 only offset 0 (index 1).

Two further operations stay inside this family:

* ``add`` copies a smaller base mask into every aligned block of the
  target that already contains a complete inner diagonal, which is how
  finer structure is layered onto a coarse mask.
* ``densify_to`` appends whole full diagonals, in a fixed recursive
  order, until a target density is reached; each appended diagonal moves
  the density by exactly 1/m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ArgumentError, PreconditionError
from .mask import NO_LABEL, BinaryMask, labels_like

#: diagonal indices representable at each small side; all four exist from m = 4 up
_SMALL_SIDE_OFFSETS = {1: {1: 0}, 2: {1: 0, 3: 1}}


def valid_diagonals(k: int) -> frozenset[int]:
    """Diagonal indices that exist at level ``k``."""
    if k < 0:
        raise ArgumentError(f"level must be non-negative, got {k}")
    if k == 0:
        return frozenset({1})
    if k == 1:
        return frozenset({1, 3})
    return frozenset({1, 2, 3, 4})


def diagonal_offset(m: int, index: int) -> int:
    """Row offset of diagonal ``index`` for an m x m mask."""
    if m in _SMALL_SIDE_OFFSETS:
        table = _SMALL_SIDE_OFFSETS[m]
        if index not in table:
            raise ArgumentError(f"diagonal {index} does not exist at side {m}")
        return table[index]
    if index not in (1, 2, 3, 4):
        raise ArgumentError(f"diagonal index must be in 1..4, got {index}")
    return (index - 1) * m // 4


@dataclass(frozen=True)
class BaseMatrixSpec:
    """Level ``k`` (side 2**k) plus the subset of diagonal indices to fill."""

    k: int
    diagonals: frozenset[int]

    def __init__(self, k: int, diagonals) -> None:
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "diagonals", frozenset(int(d) for d in diagonals))
        if self.k < 0:
            raise ArgumentError(f"level must be non-negative, got {k}")
        if not self.diagonals:
            raise ArgumentError("diagonal set must be non-empty")
        allowed = valid_diagonals(self.k)
        bad = self.diagonals - allowed
        if bad:
            raise ArgumentError(
                f"diagonals {sorted(bad)} are not representable at level {self.k}"
                f" (side {2 ** self.k} admits {sorted(allowed)})"
            )

    @property
    def side(self) -> int:
        return 2**self.k

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(diagonal_offset(self.side, j) for j in sorted(self.diagonals))


def full_diagonal(m: int, offset: int) -> BinaryMask:
    """The m x m mask with cell (i, j) = 1 iff i = j + offset (mod m)."""
    if m < 1:
        raise ArgumentError(f"side must be positive, got {m}")
    if not 0 <= offset < m:
        raise ArgumentError(f"offset must be in [0, {m}), got {offset}")
    bits = np.zeros((m, m), dtype=np.uint8)
    cols = np.arange(m)
    bits[(cols + offset) % m, cols] = 1
    return BinaryMask(bits)


def generate_base(spec: BaseMatrixSpec) -> BinaryMask:
    """Union of the spec's full diagonals, edges labeled (pass 0, diagonal index)."""
    m = spec.side
    bits = np.zeros((m, m), dtype=np.uint8)
    labels = labels_like(bits)
    cols = np.arange(m)
    for index in sorted(spec.diagonals):
        rows = (cols + diagonal_offset(m, index)) % m
        bits[rows, cols] = 1
        labels[rows, cols, 0] = 0
        labels[rows, cols, 1] = index
    return BinaryMask(bits, labels)


def full_diagonal_order(m: int) -> tuple[int, ...]:
    """All m diagonal offsets in canonical construction order.

    The four top-level offsets come first, then each halved block side b
    contributes the globally-new offsets of its inner quarter diagonals
    (odd multiples of b/4), replicated b-periodically.  Every offset
    appears exactly once.
    """
    if m == 1:
        return (0,)
    if m == 2:
        return (0, 1)
    order = [0, m // 4, m // 2, 3 * m // 4]
    b = m // 2
    while b >= 4:
        for inner in (b // 4, 3 * b // 4):
            order.extend(inner + t * b for t in range(m // b))
        b //= 2
    return tuple(order)


def _refinement_labels(m: int) -> dict[int, int]:
    """Diagonal index assigned to each offset when appended by densify."""
    table: dict[int, int] = {}
    if m == 1:
        return {0: 1}
    if m == 2:
        return {0: 1, 1: 3}
    for j in (1, 2, 3, 4):
        table[(j - 1) * m // 4] = j
    b = m // 2
    while b >= 4:
        for inner, index in ((b // 4, 2), (3 * b // 4, 4)):
            for t in range(m // b):
                table[inner + t * b] = index
        b //= 2
    return table


def complete_diagonal_offsets(mask: BinaryMask) -> tuple[int, ...]:
    """Offsets of the mask's diagonals, requiring each to be complete.

    Raises PreconditionError unless the mask is square, labeled, and its
    edge set is exactly a union of whole full diagonals.
    """
    if mask.rows != mask.cols:
        raise PreconditionError(f"expected a square mask, got {mask.rows}x{mask.cols}")
    if mask.labels is None:
        raise PreconditionError("expected a labeled mask produced by this construction")
    m = mask.rows
    rr, cc = np.nonzero(mask.bits)
    offsets = np.unique((rr - cc) % m)
    if len(offsets) * m != mask.edge_count:
        raise PreconditionError("mask edges do not form whole full diagonals")
    return tuple(int(d) for d in offsets)


def _require_power_of_two(m: int) -> int:
    k = m.bit_length() - 1
    if 2**k != m:
        raise PreconditionError(f"side {m} is not a power of two")
    return k


def block_bijection(k: int, r: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Map each cell of the 2**r grid to its aligned 2**(k-r) block of the 2**k grid.

    Cell (i, j) owns the block spanning rows [i*2**(k-r), (i+1)*2**(k-r))
    and the matching columns.  Entries are enumerated in canonical
    diagonal order, row-ascending within each diagonal.
    """
    if r < 0 or r >= k:
        raise ArgumentError(f"addend level must satisfy 0 <= r < k, got r={r}, k={k}")
    side = 2**r
    mapping: dict[tuple[int, int], tuple[int, int]] = {}
    for offset in full_diagonal_order(side):
        for i in range(side):
            j = (i - offset) % side
            mapping[(i, j)] = (i, j)
    return mapping


def add(target: BinaryMask, addend: BaseMatrixSpec) -> BinaryMask:
    """Union the addend base mask into every qualifying block of the target.

    The target side 2**k is partitioned into aligned blocks the size of
    the addend (2**r).  A block qualifies when one of the target's full
    diagonals crosses it as a complete inner diagonal, which happens
    exactly for block coordinates (R, C) with (R - C) * 2**r = d (mod
    2**k) for some target offset d divisible by 2**r.  Edges already
    present keep their labels; new edges carry the next pass index and
    the addend's diagonal index.
    """
    k = _require_power_of_two(target.rows)
    offsets = complete_diagonal_offsets(target)
    r = addend.k
    if r >= k:
        raise ArgumentError(f"addend level {r} must be below target level {k}")
    block = 2**r
    grid = 2 ** (k - r)
    block_diags = sorted({(d // block) % grid for d in offsets if d % block == 0})

    addend_mask = generate_base(addend)
    bits = np.array(target.bits)
    labels = np.array(target.labels)
    next_pass = int(labels[..., 0].max()) + 1
    add_bits = addend_mask.bits.astype(bool)
    add_diag = addend_mask.labels[..., 1]
    for delta in block_diags:
        for row_block in range(grid):
            col_block = (row_block - delta) % grid
            rs = slice(row_block * block, (row_block + 1) * block)
            cs = slice(col_block * block, (col_block + 1) * block)
            fresh = add_bits & (bits[rs, cs] == 0)
            bits[rs, cs][fresh] = 1
            labels[rs, cs, 0][fresh] = next_pass
            labels[rs, cs, 1][fresh] = add_diag[fresh]
    return BinaryMask(bits, labels)


def densify_to(mask: BinaryMask, target_density) -> BinaryMask:
    """Append whole full diagonals until the density reaches ``target_density``.

    The edge-count target is target_density * m**2 rounded to the nearest
    multiple of m (half away from zero), so the achieved density is
    within 1/(2m) of the request and every appended diagonal moves it by
    exactly 1/m.
    """
    k = _require_power_of_two(mask.rows)
    present = set(complete_diagonal_offsets(mask))
    m = mask.rows
    target = Fraction(target_density)
    if not 0 <= target <= 1:
        raise ArgumentError(f"target density must be in [0, 1], got {target}")
    if target < mask.density:
        raise ArgumentError(
            f"target density {target} is below current density {mask.density};"
            " edge removal is not supported"
        )
    scaled = target * m
    diag_target = int(scaled) + (1 if scaled - int(scaled) >= Fraction(1, 2) else 0)

    bits = np.array(mask.bits)
    labels = np.array(mask.labels)
    next_pass = int(labels[..., 0].max()) + 1
    index_of = _refinement_labels(m)
    cols = np.arange(m)
    count = len(present)
    for offset in full_diagonal_order(m):
        if count >= diag_target:
            break
        if offset in present:
            continue
        rows = (cols + offset) % m
        bits[rows, cols] = 1
        labels[rows, cols, 0] = next_pass
        labels[rows, cols, 1] = index_of[offset]
        next_pass += 1
        count += 1
    return BinaryMask(bits, labels)
