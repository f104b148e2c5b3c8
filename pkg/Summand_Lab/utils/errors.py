"""
Error types for Summand Lab
Every failure carries a stable machine-readable code and an optional witness
"""
from typing import Any, Optional


class SummandLabError(Exception):
    """Base class for all library errors"""

    code = "summand_lab_error"

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_payload(self) -> dict:
        payload = {"code": self.code, "message": self.message}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


class ConfigurationError(SummandLabError):
    code = "configuration_error"


class ParseError(SummandLabError):
    """Syntax error in polynomial text, with the offending position"""

    code = "parse_error"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", witness={"position": position, "text": text})
        self.position = position


class UnknownVariable(SummandLabError):
    code = "unknown_variable"


class RingMismatch(SummandLabError):
    code = "ring_mismatch"


class ArityMismatch(SummandLabError):
    code = "arity_mismatch"


class BadParameters(SummandLabError):
    code = "bad_parameters"


class BudgetExceeded(SummandLabError):
    code = "budget_exceeded"


class NotZeroDimensional(SummandLabError):
    code = "not_zero_dimensional"


class InhomogeneousIdeal(SummandLabError):
    code = "inhomogeneous_ideal"


class NotPositivelyGraded(SummandLabError):
    code = "not_positively_graded"


class ContractionHypothesisFails(SummandLabError):
    code = "contraction_hypothesis_fails"


class DescentNotWellDefined(SummandLabError):
    code = "descent_not_well_defined"


class NotMonomialMap(SummandLabError):
    code = "not_monomial_map"


class FullnessFailure(SummandLabError):
    code = "fullness_failure"


class GeneratorNotInvariant(SummandLabError):
    code = "generator_not_invariant"


class RewritingFailure(SummandLabError):
    code = "rewriting_failure"


class InfiniteBasis(SummandLabError):
    code = "infinite_basis"


class RankZero(SummandLabError):
    code = "rank_zero"


class CompositionMismatch(SummandLabError):
    code = "composition_mismatch"


class PointNotOnChart(SummandLabError):
    code = "point_not_on_chart"


class BadIndex(SummandLabError):
    code = "bad_index"


class NonIsolated(SummandLabError):
    code = "non_isolated"


class NonRationalPoints(SummandLabError):
    code = "non_rational_points"


class PointNotSingular(SummandLabError):
    code = "point_not_singular"


class JacobianNotZeroDimensional(SummandLabError):
    code = "jacobian_not_zero_dimensional"


class UnexpectedConfiguration(SummandLabError):
    code = "unexpected_configuration"


class NotACubic(SummandLabError):
    code = "not_a_cubic"


class Reducible(SummandLabError):
    code = "reducible"


class NotQuadratic(SummandLabError):
    code = "not_quadratic"


class UnknownExample(SummandLabError):
    code = "unknown_example"


class MapSpecError(SummandLabError):
    code = "map_spec_error"
