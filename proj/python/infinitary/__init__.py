"""Infinitary propositional formulas: stable models, proof checking and aggregate grounding."""

from ._core import (
    Formula,
    InfinitaryError,
    check_proof,
    ground,
    is_tautological,
    library,
    library_names,
    parse_formula,
    print_formula,
    reduct,
    se_counterexample,
    solve,
    stable_models,
    strongly_equivalent,
    synthesize,
    transform_reduct,
    translate_aggregate,
)

__all__ = [
    "Formula",
    "InfinitaryError",
    "check_proof",
    "ground",
    "is_tautological",
    "library",
    "library_names",
    "parse_formula",
    "print_formula",
    "reduct",
    "se_counterexample",
    "solve",
    "stable_models",
    "strongly_equivalent",
    "synthesize",
    "transform_reduct",
    "translate_aggregate",
]
