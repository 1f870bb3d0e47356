"""Farey triples and the c-/g-matrices of the Markov cluster algebra, in exact arithmetic."""

from .closedform import CaseLabel, c_matrix, classify, g_matrix
from .exchange import ExtendedMatrix, act, g_from_c, initial_matrix, matrix_by_path, mutate_matrix
from .farey import (
    INITIAL_TRIPLE,
    ExtRational,
    FareyTriple,
    ParityClass,
    enumerate_triples,
    mutate,
    normalize,
    parse_triple,
    path_to_initial,
)

__all__ = [
    "CaseLabel",
    "ExtRational",
    "ExtendedMatrix",
    "FareyTriple",
    "INITIAL_TRIPLE",
    "ParityClass",
    "act",
    "c_matrix",
    "classify",
    "enumerate_triples",
    "g_from_c",
    "g_matrix",
    "initial_matrix",
    "matrix_by_path",
    "mutate",
    "mutate_matrix",
    "normalize",
    "parse_triple",
    "path_to_initial",
]
