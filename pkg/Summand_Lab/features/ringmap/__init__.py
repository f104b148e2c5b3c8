"""Quotient rings, ring maps and their kernels"""
from .operations import (
    check_well_defined,
    descend_to_quotient,
    expand_contract,
    is_injective,
    is_module_finite_graded,
    kernel,
    preimage_ideal,
    rewrite_in_source,
)
from .quotient import QuotientRing, RingMap

__all__ = [
    "QuotientRing",
    "RingMap",
    "check_well_defined",
    "descend_to_quotient",
    "expand_contract",
    "is_injective",
    "is_module_finite_graded",
    "kernel",
    "preimage_ideal",
    "rewrite_in_source",
]
