"""Exact hypergraph chromatic polynomials, hypergraphic matroids and root bounds."""

from .chromatic import (
    a1,
    admissible_partition_form,
    check_exponential_identity,
    chromatic_polynomial,
    count_proper_colorings,
    reconstruct_via_b,
)
from .hypercore import CapExceeded, Hypergraph, HypergraphError, generate, parse_hypergraph
from .kernels import BACKEND
from .polynomial import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "Hypergraph",
    "HypergraphError",
    "IntPolynomial",
    "a1",
    "admissible_partition_form",
    "check_exponential_identity",
    "chromatic_polynomial",
    "count_proper_colorings",
    "generate",
    "parse_hypergraph",
    "reconstruct_via_b",
]
