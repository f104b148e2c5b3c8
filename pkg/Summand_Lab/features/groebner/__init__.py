"""Groebner bases and ideal-theoretic algorithms"""
from .buchberger import GroebnerBasis, reduced_groebner
from .ideal import Ideal
from .ideals import (
    colon_ideal,
    contains,
    eliminate,
    ideals_equal,
    intersect,
    is_subset,
    normal_form,
    saturate,
)
from .orders import BlockOrder, WeightOrder, monomial_order
from .zero_dim import rational_points_zero_dim, standard_monomials, zero_dim_vector_dimension

__all__ = [
    "BlockOrder",
    "GroebnerBasis",
    "Ideal",
    "WeightOrder",
    "colon_ideal",
    "contains",
    "eliminate",
    "ideals_equal",
    "intersect",
    "is_subset",
    "monomial_order",
    "normal_form",
    "rational_points_zero_dim",
    "reduced_groebner",
    "saturate",
    "standard_monomials",
    "zero_dim_vector_dimension",
]
