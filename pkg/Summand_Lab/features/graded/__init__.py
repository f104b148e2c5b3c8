"""Multigradings, graded pieces and Veronese presentations"""
from .grading import (
    MultiGrading,
    NotHomogeneous,
    discover_grading,
    grading_discovery_report,
    homogeneous_degree,
)
from .pieces import graded_piece_dimension, graded_piece_monomials

__all__ = [
    "MultiGrading",
    "NotHomogeneous",
    "discover_grading",
    "graded_piece_dimension",
    "graded_piece_monomials",
    "grading_discovery_report",
    "homogeneous_degree",
]
