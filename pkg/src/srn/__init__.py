"""Deterministic super-regular bipartite layer masks.

Build balanced sparse layer topologies from a diagonal-based matrix
algebra, verify their balance exactly or by sampling, compare them with
random bipartite expanders, and export them for use as neural-network
weight masks.
"""

from .base import (
    BaseMatrixSpec,
    add,
    block_bijection,
    densify_to,
    full_diagonal,
    full_diagonal_order,
    generate_base,
    valid_diagonals,
)
from .bridge import ExpanderBridgeReport, check_expander_sr_conditions, neighborhood
from .compose import (
    IDENTITY_SEED,
    LayerBuild,
    LayerSpec,
    NetworkSpec,
    PermutedMask,
    build_layer,
    build_network,
    ccat,
    permute,
)
from .expander import ComparisonReport, ComparisonRow, ExpanderSpec, compare, generate_expander
from .io import detect_format, export_mask, import_mask
from .mask import BinaryMask
from .rng import SplitMix64, derive_seed
from .spectral import spectral_gap
from .verify import (
    EXACT_LIMIT_DEFAULT,
    RegularityReport,
    SubsetWitness,
    check_super_regular,
    delta_star,
    density,
    epsilon_star_exact,
    epsilon_star_sampled,
    regularity_report,
    subset_density,
    to_adjacency,
)

__version__ = "0.1.0"

__all__ = [
    "BaseMatrixSpec",
    "BinaryMask",
    "ComparisonReport",
    "ComparisonRow",
    "EXACT_LIMIT_DEFAULT",
    "ExpanderBridgeReport",
    "ExpanderSpec",
    "IDENTITY_SEED",
    "LayerBuild",
    "LayerSpec",
    "NetworkSpec",
    "PermutedMask",
    "RegularityReport",
    "SplitMix64",
    "SubsetWitness",
    "add",
    "block_bijection",
    "build_layer",
    "build_network",
    "ccat",
    "check_expander_sr_conditions",
    "check_super_regular",
    "compare",
    "delta_star",
    "density",
    "densify_to",
    "derive_seed",
    "detect_format",
    "epsilon_star_exact",
    "epsilon_star_sampled",
    "export_mask",
    "full_diagonal",
    "full_diagonal_order",
    "generate_base",
    "import_mask",
    "neighborhood",
    "permute",
    "regularity_report",
    "spectral_gap",
    "subset_density",
    "to_adjacency",
    "valid_diagonals",
]
