"""DAHA equality oracle, SL2(Z) automorphisms and the Q / W elements."""

from .engine import CONVENTION_SPACE, SELECTED, Convention
from .operators import (
    DEFAULT_PRIME,
    Factor,
    LaurentPoly,
    OpSum,
    RepOperator,
    Verdict,
    as_opsum,
    oracle_equal,
    skein_to_rep,
)
from .rep import ConventionError, Rep, build_rep, convention_gate, daha_relations

__all__ = [
    "CONVENTION_SPACE",
    "SELECTED",
    "Convention",
    "DEFAULT_PRIME",
    "Factor",
    "LaurentPoly",
    "OpSum",
    "RepOperator",
    "Verdict",
    "as_opsum",
    "oracle_equal",
    "skein_to_rep",
    "ConventionError",
    "Rep",
    "build_rep",
    "convention_gate",
    "daha_relations",
]
