"""Exact computations in the braid skein algebra of the punctured torus, its
polynomial representation as a double affine Hecke algebra, and the elliptic
Hall algebra relations transported into it."""

from .coeff import RatFunc, rf_param, rf_parse
from .words import Element, Word, parse_element

__version__ = "0.1.0"

__all__ = ["RatFunc", "rf_param", "rf_parse", "Element", "Word", "parse_element", "__version__"]
