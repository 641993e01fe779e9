"""Ultrafilter extensions of finite first-order models."""

from ._ufx import (
    Error,
    Model,
    ParseError,
    PreconditionError,
    SemanticError,
    beta_extend,
    build_m1,
    cli,
    evaluate,
    lemma3,
    measure,
    paper_suite,
    parse_model,
    validate_model,
)

__all__ = [
    "Error",
    "Model",
    "ParseError",
    "PreconditionError",
    "SemanticError",
    "beta_extend",
    "build_m1",
    "cli",
    "evaluate",
    "lemma3",
    "measure",
    "paper_suite",
    "parse_model",
    "validate_model",
]
