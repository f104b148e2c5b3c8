"""Splitting construction and bounded verification"""
from .specs import (
    Compose,
    QuotientDescent,
    SemigroupProjection,
    SplittingSpec,
    TraceSplit,
    WeightProjection,
    ZeroSplitting,
    compose_splittings,
    descend_splitting,
    identity_splitting,
    make_semigroup_projection,
    make_trace_split,
    make_weight_projection,
)
from .verify import REFUTED, VERIFIED, SplittingReport, Violation, verify_splitting

__all__ = [
    "Compose",
    "QuotientDescent",
    "REFUTED",
    "SemigroupProjection",
    "SplittingReport",
    "SplittingSpec",
    "TraceSplit",
    "VERIFIED",
    "Violation",
    "WeightProjection",
    "ZeroSplitting",
    "compose_splittings",
    "descend_splitting",
    "identity_splitting",
    "make_semigroup_projection",
    "make_trace_split",
    "make_weight_projection",
    "verify_splitting",
]
