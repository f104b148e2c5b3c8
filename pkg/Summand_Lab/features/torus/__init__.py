"""Torus invariants and Pfaffians feature package"""
from .invariants import (
    MonoidGenerators,
    TorusAction,
    extend_action_section_variable,
    invariant_monomials,
    monoid_minimal_generators,
    section_ring_variables,
)
from .pfaffian import SkewMatrix, all_pfaffians, pfaffian, skew_determinant

__all__ = [
    "MonoidGenerators",
    "SkewMatrix",
    "TorusAction",
    "all_pfaffians",
    "extend_action_section_variable",
    "invariant_monomials",
    "monoid_minimal_generators",
    "pfaffian",
    "section_ring_variables",
    "skew_determinant",
]
