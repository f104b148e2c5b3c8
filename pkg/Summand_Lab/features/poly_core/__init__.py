"""Exact polynomial arithmetic, parsing and calculus"""
from .calculus import chart_localize, determinant, hessian_at_origin, jet, partial_derivatives
from .parser import parse_polynomial, parse_polynomials
from .rings import PolyRing, Polynomial, evaluate, poly_arith, substitute

__all__ = [
    "PolyRing",
    "Polynomial",
    "chart_localize",
    "determinant",
    "evaluate",
    "hessian_at_origin",
    "jet",
    "parse_polynomial",
    "parse_polynomials",
    "partial_derivatives",
    "poly_arith",
    "substitute",
]
