"""Finite-field DFT analysis of LFSR keystream generators."""

from ._seqdft import (
    Generator,
    InapplicableError,
    InconsistentError,
    InsufficientDataError,
    ParseError,
    SeqdftError,
    a51_keystream,
    attack,
    berlekamp_massey,
    boolean_metrics,
    complexity,
    crt_solve,
    crt_split,
    dft,
    exhaustive_search,
    factor,
    is_primitive,
)

__all__ = [
    "Generator",
    "InapplicableError",
    "InconsistentError",
    "InsufficientDataError",
    "ParseError",
    "SeqdftError",
    "a51_keystream",
    "attack",
    "berlekamp_massey",
    "boolean_metrics",
    "complexity",
    "crt_solve",
    "crt_split",
    "dft",
    "exhaustive_search",
    "factor",
    "is_primitive",
]
