"""Binary biadjacency masks.

A mask is an immutable rows x cols 0/1 matrix viewed as a bipartite
graph: rows are the left part, columns the right part.  Edges may carry
an optional (pass, diagonal) label recording which construction pass and
which diagonal produced them; the mathematical operations ignore labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ArgumentError

NO_LABEL = -1


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BinaryMask:
    """Immutable 0/1 matrix with optional per-edge (pass, diagonal) labels."""

    bits: np.ndarray
    labels: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[0] < 1 or bits.shape[1] < 1:
            raise ArgumentError(f"mask must be a non-empty 2-D array, got shape {bits.shape}")
        if not np.isin(bits, (0, 1)).all():
            raise ArgumentError("mask entries must be 0 or 1")
        object.__setattr__(self, "bits", _freeze(bits))
        if self.labels is not None:
            labels = np.ascontiguousarray(self.labels, dtype=np.int32)
            if labels.shape != (*bits.shape, 2):
                raise ArgumentError(
                    f"labels must have shape {(*bits.shape, 2)}, got {labels.shape}"
                )
            edge = bits.astype(bool)
            if (labels[~edge] != NO_LABEL).any():
                raise ArgumentError("labels are only defined where an edge is present")
            if (labels[edge] < 0).any():
                raise ArgumentError("edge labels must be non-negative")
            object.__setattr__(self, "labels", _freeze(labels))

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMask":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BinaryMask":
        return cls(np.ones((rows, cols), dtype=np.uint8))

    @classmethod
    def from_edges(cls, rows: int, cols: int, edges) -> "BinaryMask":
        bits = np.zeros((rows, cols), dtype=np.uint8)
        for i, j in edges:
            bits[i, j] = 1
        return cls(bits)

    # -- shape and counts ---------------------------------------------

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.bits.shape

    @property
    def edge_count(self) -> int:
        return int(self.bits.sum())

    @property
    def density(self) -> Fraction:
        return Fraction(self.edge_count, self.rows * self.cols)

    @property
    def row_degrees(self) -> np.ndarray:
        return self.bits.sum(axis=1, dtype=np.int64)

    @property
    def col_degrees(self) -> np.ndarray:
        return self.bits.sum(axis=0, dtype=np.int64)

    # -- derived masks -------------------------------------------------

    def transpose(self) -> "BinaryMask":
        labels = None if self.labels is None else self.labels.transpose(1, 0, 2)
        return BinaryMask(self.bits.T, labels)

    def without_labels(self) -> "BinaryMask":
        return BinaryMask(self.bits) if self.labels is not None else self

    def edges(self) -> list[tuple[int, int]]:
        """Edge list sorted by (row, col)."""
        rr, cc = np.nonzero(self.bits)
        return list(zip(rr.tolist(), cc.tolist()))

    # -- equality -------------------------------------------------------

    def same_bits(self, other: "BinaryMask") -> bool:
        return self.shape == other.shape and bool(np.array_equal(self.bits, other.bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMask):
            return NotImplemented
        if not self.same_bits(other):
            return False
        if (self.labels is None) != (other.labels is None):
            return False
        return self.labels is None or bool(np.array_equal(self.labels, other.labels))

    def __repr__(self) -> str:
        labeled = "labeled" if self.labels is not None else "unlabeled"
        return f"BinaryMask({self.rows}x{self.cols}, {self.edge_count} edges, {labeled})"


def labels_like(bits: np.ndarray) -> np.ndarray:
    """Fresh all-unlabeled label array matching ``bits``."""
    return np.full((*bits.shape, 2), NO_LABEL, dtype=np.int32)
