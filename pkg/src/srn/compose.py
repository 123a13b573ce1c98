"""Layer composition: concatenation, node permutation, network stacking.

Rectangular layers are built by tiling a square base block along the
longer dimension; supported shapes are therefore (2**k) x (t * 2**k) or
the transpose.  After construction the node order of each layer is
scrambled by an independent seeded permutation, which changes none of
the balance quantities but restores the mixing that the deterministic
edge pattern lacks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .base import BaseMatrixSpec, densify_to, generate_base
from .errors import ArgumentError, PreconditionError, UnsupportedShapeError
from .mask import BinaryMask
from .rng import SplitMix64, derive_seed
from .verify import EXACT_LIMIT_DEFAULT, RegularityReport, regularity_report

#: seed 0 is reserved: it yields identity permutations (used by tests)
IDENTITY_SEED = 0


@dataclass(frozen=True)
class PermutedMask:
    """A mask plus the row/column permutations scrambling its node order.

    The effective entry (i, j) is ``base(row_perm[i], col_perm[j])``.
    """

    base: BinaryMask
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    seed: int

    def __post_init__(self) -> None:
        if sorted(self.row_perm) != list(range(self.base.rows)):
            raise ArgumentError("row_perm must be a permutation of the row indices")
        if sorted(self.col_perm) != list(range(self.base.cols)):
            raise ArgumentError("col_perm must be a permutation of the column indices")

    @property
    def rows(self) -> int:
        return self.base.rows

    @property
    def cols(self) -> int:
        return self.base.cols

    def to_mask(self) -> BinaryMask:
        """Materialize the permuted view as a plain mask."""
        rows = np.asarray(self.row_perm)
        cols = np.asarray(self.col_perm)
        bits = self.base.bits[np.ix_(rows, cols)]
        labels = None
        if self.base.labels is not None:
            labels = self.base.labels[np.ix_(rows, cols)]
        return BinaryMask(bits, labels)


def permute(mask: BinaryMask, seed: int) -> PermutedMask:
    """Scramble row and column order with independent seeded shuffles."""
    if seed == IDENTITY_SEED:
        row_perm = tuple(range(mask.rows))
        col_perm = tuple(range(mask.cols))
    else:
        row_perm = SplitMix64(derive_seed(seed, 0)).permutation(mask.rows)
        col_perm = SplitMix64(derive_seed(seed, 1)).permutation(mask.cols)
    return PermutedMask(base=mask, row_perm=row_perm, col_perm=col_perm, seed=seed)


def ccat(left: BinaryMask, right: BinaryMask) -> BinaryMask:
    """Column-wise concatenation of two equal-density masks.

    Concatenating equal densities preserves the density exactly.  A
    mismatch in the min-degree ratio does not reject the input, but the
    effective delta of the result degrades to the smaller side, so a
    warning is attached.
    """
    if left.rows != right.rows:
        raise ArgumentError(
            f"row counts differ: {left.rows} vs {right.rows}; column-wise"
            " concatenation needs a shared left part"
        )
    if left.density != right.density:
        raise PreconditionError(
            f"densities differ: {left.density} vs {right.density};"
            " concatenation only preserves balance at equal density"
        )
    l_ratio = Fraction(int(left.row_degrees.min()), max(int(left.col_degrees.min()), 1))
    r_ratio = Fraction(int(right.row_degrees.min()), max(int(right.col_degrees.min()), 1))
    if l_ratio != r_ratio:
        warnings.warn(
            "degree ratios differ; the effective delta of the concatenation"
            " degrades to the smaller side",
            stacklevel=2,
        )
    bits = np.concatenate([left.bits, right.bits], axis=1)
    labels = None
    if left.labels is not None and right.labels is not None:
        labels = np.concatenate([left.labels, right.labels], axis=1)
    return BinaryMask(bits, labels)


@dataclass(frozen=True)
class LayerSpec:
    in_size: int
    out_size: int
    target_density: Fraction
    seed: int

    def __post_init__(self) -> None:
        if self.in_size < 1 or self.out_size < 1:
            raise ArgumentError("layer sizes must be positive")
        object.__setattr__(self, "target_density", Fraction(self.target_density))
        if not 0 < self.target_density <= 1:
            raise ArgumentError(f"target density must be in (0, 1], got {self.target_density}")


@dataclass(frozen=True)
class NetworkSpec:
    """Chain of layer specs; consecutive sizes must agree."""

    layers: tuple[LayerSpec, ...]

    def __post_init__(self) -> None:
        if not self.layers:
            raise ArgumentError("a network needs at least one layer")
        for first, second in zip(self.layers, self.layers[1:]):
            if first.out_size != second.in_size:
                raise ArgumentError(
                    f"layer chain breaks: out_size {first.out_size} feeds"
                    f" in_size {second.in_size}"
                )

    @classmethod
    def from_sizes(cls, sizes, target_density, seed: int) -> "NetworkSpec":
        sizes = [int(s) for s in sizes]
        if len(sizes) < 2:
            raise ArgumentError("need at least two layer sizes")
        layers = tuple(
            LayerSpec(a, b, Fraction(target_density), derive_seed(seed, i))
            for i, (a, b) in enumerate(zip(sizes, sizes[1:]))
        )
        return cls(layers)


def _nearest_powers(n: int) -> tuple[int, int]:
    below = 1 << max(n.bit_length() - 1, 0)
    return below, below * 2


def build_layer(spec: LayerSpec) -> PermutedMask:
    """Square base block, densified, tiled to shape, then permuted.

    The mask has in_size rows and out_size columns.  The shorter side
    must be a power of two and must divide the longer side.
    """
    short = min(spec.in_size, spec.out_size)
    long = max(spec.in_size, spec.out_size)
    k = short.bit_length() - 1
    if 2**k != short:
        lo, hi = _nearest_powers(short)
        raise UnsupportedShapeError(
            f"shorter side {short} is not a power of two; nearest supported"
            f" block sides are {lo} and {hi}"
        )
    if long % short != 0:
        raise UnsupportedShapeError(
            f"longer side {long} is not a multiple of the block side {short};"
            f" nearest supported sizes are {long - long % short} and"
            f" {long + short - long % short}"
        )
    block = densify_to(generate_base(BaseMatrixSpec(k, {1})), spec.target_density)
    tiled = block
    with warnings.catch_warnings():
        # identical tiles keep every degree uniform; the ratio drift the
        # warning guards against is just the growing aspect ratio
        warnings.simplefilter("ignore")
        for _ in range(long // short - 1):
            tiled = ccat(tiled, block)
    if spec.in_size > spec.out_size:
        tiled = tiled.transpose()
    return permute(tiled, spec.seed)


@dataclass(frozen=True)
class LayerBuild:
    mask: PermutedMask
    report: RegularityReport


def build_network(
    spec: NetworkSpec,
    *,
    exact_limit: int = EXACT_LIMIT_DEFAULT,
    samples: int = 2000,
) -> list[LayerBuild]:
    """Build every layer independently and attach a balance report to each.

    Reports switch to sampling (with the layer seed) when the layer is
    too large for exact enumeration.
    """
    builds = []
    for index, layer in enumerate(spec.layers):
        try:
            mask = build_layer(layer)
        except (ArgumentError, PreconditionError) as exc:
            raise type(exc)(f"layer {index}: {exc}") from exc
        flat = mask.to_mask()
        if min(flat.rows, flat.cols) <= exact_limit:
            report = regularity_report(flat, exact_limit=exact_limit)
        else:
            report = regularity_report(flat, samples=samples, seed=layer.seed)
        builds.append(LayerBuild(mask=mask, report=report))
    return builds
