"""Parameterized Set Cover on flat (semi-ladder-free) hypergraphs."""

from ._core import (
    CCInstance,
    Cover,
    GroupStep,
    GroupTrace,
    Hypergraph,
    KernelResult,
    Literal,
    brute_force_min_cover,
    cc_to_setcover,
    closure_min,
    dual,
    gen,
    greedy_cover,
    group,
    hg_size,
    is_flat,
    is_reduced,
    kernelize,
    lift_cover,
    members_K,
    parse_cc,
    parse_cover,
    parse_hg,
    push_cover,
    reduce,
    semi_ladder_index,
    serialize_cc,
    serialize_cover,
    serialize_hg,
    solve,
    verify_cover,
)

__all__ = [
    "CCInstance",
    "Cover",
    "GroupStep",
    "GroupTrace",
    "Hypergraph",
    "KernelResult",
    "Literal",
    "brute_force_min_cover",
    "cc_to_setcover",
    "closure_min",
    "dual",
    "gen",
    "greedy_cover",
    "group",
    "hg_size",
    "is_flat",
    "is_reduced",
    "kernelize",
    "lift_cover",
    "members_K",
    "parse_cc",
    "parse_cover",
    "parse_hg",
    "push_cover",
    "reduce",
    "semi_ladder_index",
    "serialize_cc",
    "serialize_cover",
    "serialize_hg",
    "solve",
    "verify_cover",
]
