"""EL reasoning with concept variables.

Ontologies, goals and models are passed as text in the same syntax the
command-line tool reads.
"""

from ._elx import (
    Error,
    FragmentError,
    ParseError,
    ResourceLimitError,
    check_model,
    check_schema,
    classify_axiom,
    decide,
    desugar,
    entails_ground,
    expand,
    normalize_concept,
    refute,
    run_cli,
)

__all__ = [
    "Error",
    "FragmentError",
    "ParseError",
    "ResourceLimitError",
    "check_model",
    "check_schema",
    "classify_axiom",
    "decide",
    "desugar",
    "entails_ground",
    "expand",
    "normalize_concept",
    "refute",
    "run_cli",
]
