"""Exact algebraic concordance invariants of knots from Seifert matrices."""
from .errors import ConcordiaError
from .laurent import ConwayPoly, LaurentPoly, RatFunc, parse_laurent
from .seifert import (FIGURE_EIGHT, K_J, TREFOIL_L, TREFOIL_R, UNKNOT,
                      AmphicheiralData, SeifertMatrix, alexander_polynomial,
                      connected_sum, conway_polynomial, crossing_triple,
                      genus2_mutant, mirror, reverse, validate)
from .signatures import s7, sigma, signature_function, tristram_levine
from .witt import HermitianForm, diagonalize, hermitianize, witt_reduce

__version__ = "0.1.0"

__all__ = [
    "AmphicheiralData", "ConcordiaError", "ConwayPoly", "FIGURE_EIGHT",
    "HermitianForm", "K_J", "LaurentPoly", "RatFunc", "SeifertMatrix",
    "TREFOIL_L", "TREFOIL_R", "UNKNOT", "alexander_polynomial",
    "connected_sum", "conway_polynomial", "crossing_triple", "diagonalize",
    "genus2_mutant", "hermitianize", "mirror", "parse_laurent", "reverse",
    "s7", "sigma", "signature_function", "tristram_levine", "validate",
    "witt_reduce",
]
