"""Exact comb/fence tiling counts, metatile censuses, and permanents of
banded (0,1) Toeplitz matrices."""

from combperm._core import (
    Board,
    CriterionResult,
    IdentityReport,
    TileShape,
    a080013_sequence,
    census,
    count_restricted_perms,
    count_tilings,
    decompose_metatiles,
    digraph_dot,
    enumerate_metatiles,
    enumerate_tilings,
    eval_sequence,
    fence_tiles_from_w,
    make_comb,
    make_fence,
    mirror,
    mu,
    parse_tile_spec,
    permanent_ryser,
    power_product,
    run_acceptance,
    slot_swap,
    theorem1_sequence,
    toeplitz_from_w,
    verify_corollary3,
    verify_identity_block,
    verify_identity_gen1,
    verify_identity_gen2,
    verify_identity_mixed,
    verify_identity_mixed2,
    verify_identity_sum,
    verify_mu_theorems,
    verify_narayana_padovan,
    verify_theorem2,
)

__version__ = "0.1.0"

__all__ = [
    "Board",
    "CriterionResult",
    "IdentityReport",
    "TileShape",
    "a080013_sequence",
    "census",
    "count_restricted_perms",
    "count_tilings",
    "decompose_metatiles",
    "digraph_dot",
    "enumerate_metatiles",
    "enumerate_tilings",
    "eval_sequence",
    "fence_tiles_from_w",
    "make_comb",
    "make_fence",
    "mirror",
    "mu",
    "parse_tile_spec",
    "permanent_ryser",
    "power_product",
    "run_acceptance",
    "slot_swap",
    "theorem1_sequence",
    "toeplitz_from_w",
    "verify_corollary3",
    "verify_identity_block",
    "verify_identity_gen1",
    "verify_identity_gen2",
    "verify_identity_mixed",
    "verify_identity_mixed2",
    "verify_identity_sum",
    "verify_mu_theorems",
    "verify_narayana_padovan",
    "verify_theorem2",
]
