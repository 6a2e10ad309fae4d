"""Reed-Solomon coding with fixed-iteration Euclidean key-equation solvers."""

from .code import (
    CodeParams,
    ErrataPattern,
    apply_errata,
    compute_syndromes,
    encode,
    generator_poly,
    is_codeword,
    message_of,
    reference_locator_evaluator,
)
from .decoder import DecodeReport, Solver, Status, brute_force_decode, decode
from .gf import GF, field
from .kes_modified import algorithm_I, algorithm_I_star, algorithm_II, classify, kes_step

__version__ = "0.1.0"

__all__ = [
    "CodeParams",
    "ErrataPattern",
    "apply_errata",
    "compute_syndromes",
    "encode",
    "generator_poly",
    "is_codeword",
    "message_of",
    "reference_locator_evaluator",
    "DecodeReport",
    "Solver",
    "Status",
    "brute_force_decode",
    "decode",
    "GF",
    "field",
    "algorithm_I",
    "algorithm_I_star",
    "algorithm_II",
    "classify",
    "kes_step",
]
