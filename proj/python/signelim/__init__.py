"""Signed elimination orderings: recognition, certificates and invariants."""

from ._core import (
    CapError,
    ParseError,
    SignedGraph,
    brute_force_se,
    build_family,
    characterize,
    cross_check,
    deg_tilde,
    degree_profile,
    enumerate_seos,
    greedy_seo,
    invariance_check,
    is_seo,
    is_signed_eliminable,
    parse_sg,
    serialize_sg,
    signed_simplicial_set,
    special_checks,
    verify_certificate,
)

__all__ = [
    "CapError",
    "ParseError",
    "SignedGraph",
    "brute_force_se",
    "build_family",
    "characterize",
    "cross_check",
    "deg_tilde",
    "degree_profile",
    "enumerate_seos",
    "greedy_seo",
    "invariance_check",
    "is_seo",
    "is_signed_eliminable",
    "parse_sg",
    "serialize_sg",
    "signed_simplicial_set",
    "special_checks",
    "verify_certificate",
]
