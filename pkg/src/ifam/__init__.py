"""Extremal bounds, constructions and brute-force oracles for intersecting set families."""
from .bounds import (
    BoundReport,
    ResistantDescriptor,
    bound_ab,
    bound_corhm,
    bound_corkz,
    bound_ft,
    bound_full1,
    bound_hk,
    bound_thm1,
    bound_weighted,
    enumerate_resistant,
    neutral_sets,
    resistant_descriptor,
    resistant_pairs,
    size_C3,
)
from .core import CascadeForm, GroundSet, SetFamily, binomial, cascade, lex_compare
from .lex import CharPair, lex_family, lex_size, shadow, shadow_lower_bound, strong_intersect
from .oracles import OracleResult, oracle_lemmin, oracle_lexpair, oracle_maximal_intersecting
from .zoo import family_from_json, family_stats, family_to_json

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CascadeForm", "CharPair", "GroundSet", "OracleResult",
    "ResistantDescriptor", "SetFamily", "binomial", "bound_ab", "bound_corhm",
    "bound_corkz", "bound_ft", "bound_full1", "bound_hk", "bound_thm1",
    "bound_weighted", "cascade", "enumerate_resistant", "family_from_json",
    "family_stats", "family_to_json", "lex_compare", "lex_family", "lex_size",
    "neutral_sets", "oracle_lemmin", "oracle_lexpair", "oracle_maximal_intersecting",
    "resistant_descriptor", "resistant_pairs", "shadow", "shadow_lower_bound",
    "size_C3", "strong_intersect",
]
