"""
Surface verdicts
Per-point reports, singularity configurations, the Milnor-sum rule for del
Pezzo surfaces and the direct-summand verdict for cubic surfaces
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ...utils.errors import BadParameters, NonIsolated, NonRationalPoints, NotACubic, Reducible, UnexpectedConfiguration
from ..poly_core.rings import Polynomial, ScalarLike, scalar_str
from .ade import ADEType, classify_local
from .singular import ProjectivePoint, default_chart, local_equation, point_milnor, projective_singular_points

logger = logging.getLogger(__name__)

SUMMAND_TORIC_3A2 = "SummandToric3A2"
RULED_OUT_GURJAR = "RuledOutGurjar"
RULED_OUT_COHOMOLOGY = "RuledOutCohomology"
RULED_OUT_SMOOTH = "RuledOutSmooth"
NOT_QUOTIENT_SINGULARITIES = "NotQuotientSingularities"
INCONCLUSIVE = "Inconclusive"

# Du Val configurations on normal cubic surfaces; D4 occurs in two deformation classes.
CUBIC_CONFIGURATIONS: Tuple[Tuple[str, ...], ...] = (
    ("A1",), ("A1", "A1"), ("A1", "A2"), ("A1", "A1", "A1"), ("A1", "A3"),
    ("A1", "A1", "A2"), ("A1", "A1", "A1", "A1"), ("A1", "A4"), ("A1", "A1", "A3"),
    ("A1", "A2", "A2"), ("A1", "A5"), ("A2",), ("A2", "A2"), ("A2", "A2", "A2"),
    ("A3",), ("A4",), ("A5",), ("D4",), ("D4",), ("D5",), ("E6",),
)

JUSTIFICATIONS = {
    RULED_OUT_SMOOTH: (
        r"Theorem: the anticanonical ring of a del Pezzo surface of degree d is a finite direct summand "
        r"of a polynomial ring if and only if $d\geq 5$; a smooth cubic surface has d = 3."
    ),
    NOT_QUOTIENT_SINGULARITIES: (
        "Lemma klt: a module-finite direct summand of a polynomial ring has klt singularities; on a surface "
        "those are quotient singularities, so the cubic must be normal with Du Val points."
    ),
    RULED_OUT_COHOMOLOGY: (
        r"Lemma: for a finite direct summand the Milnor numbers sum to "
        r"= \dim H^2(\wtilde X;\C)-1 on the minimal resolution; for a cubic surface "
        r"H^2(\wtilde X;\C)=\C^7, so the sum must be 6."
    ),
    SUMMAND_TORIC_3A2: (
        "The 3A2 cubic is the toric surface x^3 = yzw, a finite direct summand of a polynomial ring."
    ),
    RULED_OUT_GURJAR: (
        "The A1A5 and E6 cubic surfaces admit no finite morphism from the projective plane."
    ),
    INCONCLUSIVE: "Configuration with Milnor sum 6 outside the known cases.",
}


def configuration_label(types: Sequence[ADEType]) -> str:
    """Compact multiset label such as 3A2 or A1+A5; empty for a smooth surface."""
    counts = Counter(str(t) for t in types)
    ordered = sorted(counts, key=lambda s: ADEType.parse(s).sort_key())
    return "+".join(label if counts[label] == 1 else f"{counts[label]}{label}" for label in ordered)


@dataclass(frozen=True)
class SingularPointReport:
    point: ProjectivePoint
    chart: str
    milnor: int
    hessian_corank: int
    ade_type: ADEType
    local_equation: Polynomial
    milnor_method: str = "saturation"

    def coordinates(self) -> List[str]:
        return [scalar_str(c) for c in self.point]


def ade_classify(F: Polynomial, point: Sequence[ScalarLike], chart: Optional[str] = None) -> SingularPointReport:
    """Milnor number, Hessian corank and Du Val type of V(F) at ``point``."""
    chart = chart or default_chart(F.ring, point)
    milnor, method = point_milnor(F, point, chart)
    f = local_equation(F, point, chart)
    kind, hessian = classify_local(f, milnor)
    logger.debug(f"Point {tuple(scalar_str(c) for c in point)} in chart {chart}: mu = {milnor}, {kind}")
    return SingularPointReport(tuple(point), chart, milnor, hessian.corank, kind, f, method)


@dataclass(frozen=True)
class Configuration:
    reports: Tuple[SingularPointReport, ...]
    degree: int

    @property
    def types(self) -> Tuple[ADEType, ...]:
        return tuple(sorted((r.ade_type for r in self.reports), key=lambda t: t.sort_key()))

    @property
    def mu_sum(self) -> int:
        return sum(r.milnor for r in self.reports)

    @property
    def label(self) -> str:
        return configuration_label(self.types)

    @property
    def all_du_val(self) -> bool:
        return all(t.is_du_val for t in self.types)

    def labels(self) -> Tuple[str, ...]:
        return tuple(str(t) for t in self.types)


def singularity_configuration(F: Polynomial) -> Configuration:
    """Du Val types over all singular points, checked against the cubic table when deg F = 3."""
    locus = projective_singular_points(F)
    if not locus.complete:
        raise NonRationalPoints(
            f"Surface {F} has singular points that are not rational",
            witness={"charts": list(locus.charts_with_nonrational)},
        )
    reports = tuple(ade_classify(F, p) for p in locus.points)
    config = Configuration(reports, F.total_degree())
    if config.degree == 3 and reports and config.all_du_val and config.labels() not in CUBIC_CONFIGURATIONS:
        raise UnexpectedConfiguration(
            f"Configuration {config.label} is not a Du Val configuration of a cubic surface",
            witness={"configuration": list(config.labels())},
        )
    logger.info(f"Surface {F}: configuration {config.label or 'smooth'}, Milnor sum {config.mu_sum}")
    return config


@dataclass(frozen=True)
class SurfaceVerdict:
    verdict: str
    configuration: Tuple[str, ...]
    mu_sum: int
    justification: str
    reports: Tuple[SingularPointReport, ...] = field(default_factory=tuple)

    @property
    def label(self) -> str:
        return configuration_label([ADEType.parse(s) for s in self.configuration])

    @property
    def is_summand(self) -> bool:
        return self.verdict == SUMMAND_TORIC_3A2


def _verdict(name: str, config: Optional[Configuration] = None) -> SurfaceVerdict:
    if config is None:
        return SurfaceVerdict(name, (), 0, JUSTIFICATIONS[name])
    return SurfaceVerdict(name, config.labels(), config.mu_sum, JUSTIFICATIONS[name], config.reports)


def check_cubic(F: Polynomial) -> None:
    """Raise unless F is an irreducible homogeneous cubic in four variables."""
    if F.ring.arity != 4 or not F or not F.is_homogeneous() or F.total_degree() != 3:
        raise NotACubic(f"{F} is not a homogeneous cubic in four variables", witness={"polynomial": str(F)})
    _, factors = F.rep.factor_list()
    if sum(k for _, k in factors) > 1:
        shown = [str(Polynomial(F.ring, f)) for f, k in factors for _ in range(k)]
        raise Reducible(f"Cubic {F} factors over Q", witness={"factors": shown})


def cubic_verdict(F: Polynomial) -> SurfaceVerdict:
    """Decide whether the cone over V(F) can be a direct summand of a polynomial ring."""
    check_cubic(F)
    try:
        config = singularity_configuration(F)
    except NonIsolated:
        logger.info(f"Cubic {F} has non-isolated singularities")
        return _verdict(NOT_QUOTIENT_SINGULARITIES)
    if not config.reports:
        result = _verdict(RULED_OUT_SMOOTH, config)
    elif not config.all_du_val:
        result = _verdict(NOT_QUOTIENT_SINGULARITIES, config)
    elif config.mu_sum != 6:
        result = _verdict(RULED_OUT_COHOMOLOGY, config)
    elif config.labels() == ("A2", "A2", "A2"):
        result = _verdict(SUMMAND_TORIC_3A2, config)
    elif config.labels() in (("A1", "A5"), ("E6",)):
        result = _verdict(RULED_OUT_GURJAR, config)
    else:
        result = _verdict(INCONCLUSIVE, config)
    logger.info(f"Cubic {F}: {result.verdict} ({config.label or 'smooth'})")
    return result


@dataclass(frozen=True)
class MilnorRule:
    degree: int
    required: int
    mu_sum: int

    @property
    def consistent(self) -> bool:
        return self.mu_sum == self.required


def del_pezzo_milnor_rule(degree: int, configuration: Sequence[str]) -> MilnorRule:
    """Necessary condition for a finite summand: Milnor numbers of the Du Val points sum to 9 - degree."""
    if not 1 <= degree <= 9:
        raise BadParameters(f"Del Pezzo degree must lie in 1..9, got {degree}")
    total = 0
    for label in configuration:
        kind = ADEType.parse(label)
        if not kind.is_du_val:
            raise BadParameters(f"{label} is not a Du Val type")
        total += kind.milnor
    return MilnorRule(degree, 9 - degree, total)
