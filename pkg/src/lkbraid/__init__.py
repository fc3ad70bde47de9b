"""Exact Lawrence-Krammer representation of the braid groups, with a geometric cross-check."""

from .braid import BraidWord, braid_equal, invert, oracle_is_trivial, parse_word
from .laurent import LaurentPoly2, Monomial, lp_format, lp_parse
from .lkrep import LKMatrix, generator_matrix, is_identity, represent

__all__ = [
    "BraidWord", "parse_word", "invert", "oracle_is_trivial", "braid_equal",
    "LaurentPoly2", "Monomial", "lp_format", "lp_parse",
    "LKMatrix", "generator_matrix", "represent", "is_identity",
]
__version__ = "0.1.0"
