"""Two-term tilting complexes of Brauer graph algebras."""

from ._brauer import (
    BrauerError,
    BrauerLookupError,
    Graph,
    InternalInvariantViolation,
    NotEnumerable,
    ParseError,
    ValidationError,
    WalkError,
    admissible_walks,
    canonical_walk,
    compatible,
    crosscheck,
    hasse_json,
    hom_m_to_n,
    is_admissible,
    module_strings,
    pretilting,
    two_term_tilting,
)

__all__ = [
    "BrauerError",
    "Graph",
    "InternalInvariantViolation",
    "BrauerLookupError",
    "NotEnumerable",
    "ParseError",
    "ValidationError",
    "WalkError",
    "admissible_walks",
    "canonical_walk",
    "compatible",
    "crosscheck",
    "hasse_json",
    "hom_m_to_n",
    "is_admissible",
    "module_strings",
    "pretilting",
    "two_term_tilting",
]
