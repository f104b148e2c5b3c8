#!/usr/bin/env python3
"""
Summand Lab - Command Line
Runs one computation per process: JSON result on stdout, a one-line summary
and all logging on stderr. Exit codes: 0 ok, 1 refuted, 2 error.
"""

import argparse
import json
import logging
import sys
import time
from typing import Any, Dict, List, Optional, Sequence

import yaml

from Summand_Lab.features.catalog import build_named_example
from Summand_Lab.features.graded import MultiGrading, grading_discovery_report
from Summand_Lab.features.graded.veronese import veronese_presentation
from Summand_Lab.features.groebner import is_subset, monomial_order, reduced_groebner
from Summand_Lab.features.groebner.ideal import Ideal
from Summand_Lab.features.groebner.orders import order_name
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.features.ringmap import QuotientRing, RingMap, check_well_defined, kernel
from Summand_Lab.features.splitting import (
    VERIFIED,
    ZeroSplitting,
    make_semigroup_projection,
    make_trace_split,
    verify_splitting,
)
from Summand_Lab.features.surface import cubic_verdict
from Summand_Lab.features.surface.verdict import INCONCLUSIVE, SUMMAND_TORIC_3A2
from Summand_Lab.features.torus import TorusAction, invariant_monomials, monoid_minimal_generators
from Summand_Lab.utils import models
from Summand_Lab.utils.errors import BadParameters, MapSpecError, SummandLabError
from Summand_Lab.utils.settings import get_settings

logger = logging.getLogger(__name__)

# Constants
VIOLATION_LIMIT = 10
DEFAULT_CUBIC_VARIABLES = "x,y,z,w"
DEFAULT_LETTERS = "uvwxyzabcdefghijklmnopqrst"
SPLITTING_KINDS = ("semigroup", "trace", "zero")
OK_VERDICTS = (SUMMAND_TORIC_3A2, INCONCLUSIVE)


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors become BadParameters so they are reported like any other error."""

    def error(self, message):
        raise BadParameters(f"{self.prog}: {message}")


# -- input helpers ---------------------------------------------------------------


def _split_names(text: str) -> List[str]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise BadParameters(f"No variable names in {text!r}")
    return names


def default_variable_names(n: int) -> List[str]:
    """u, v, w, ... for small arities, x0, x1, ... otherwise."""
    if n <= len(DEFAULT_LETTERS):
        return list(DEFAULT_LETTERS[:n])
    return [f"x{i}" for i in range(n)]


def _int_list(text: str, what: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise BadParameters(f"{what} must be comma-separated integers, got {text!r}")


def _ring_from_spec(data: Any, role: str) -> QuotientRing:
    if not isinstance(data, dict) or "variables" not in data:
        raise MapSpecError(f"Map spec needs a '{role}' section with 'variables'", witness={"section": role})
    variables = data["variables"]
    if isinstance(variables, str):
        variables = _split_names(variables)
    relations = data.get("relations") or []
    grading = data.get("grading")
    W = MultiGrading.from_rows(grading, len(variables)) if grading else None
    return QuotientRing.parse([str(v) for v in variables], [str(r) for r in relations], W)


def map_from_spec(data: Any, name: str = "") -> RingMap:
    """RingMap from a mapping with 'source', 'target' and 'images' (list or variable -> image)."""
    if not isinstance(data, dict):
        raise MapSpecError("Map spec must be a mapping with source, target and images")
    source = _ring_from_spec(data.get("source"), "source")
    target = _ring_from_spec(data.get("target"), "target")
    images = data.get("images")
    if isinstance(images, dict):
        missing = [v for v in source.ambient.variables if v not in images]
        if missing:
            raise MapSpecError(f"No image given for {missing}", witness={"missing": missing})
        images = [images[v] for v in source.ambient.variables]
    if not isinstance(images, list):
        raise MapSpecError("Map spec 'images' must be a list or a mapping")
    return RingMap.parse(source, target, [str(i) for i in images], name=str(data.get("name") or name))


def load_map(reference: str) -> RingMap:
    """``example:<key>[:p1,p2,...]`` or the path of a YAML map spec."""
    if reference.startswith("example:"):
        parts = reference.split(":")
        params = _int_list(parts[2], "Example parameters") if len(parts) > 2 else []
        example = build_named_example(parts[1], params)
        if example.ring_map is None:
            raise MapSpecError(f"Example {parts[1]} has no ring map", witness={"example": parts[1]})
        return example.ring_map
    try:
        with open(reference, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except FileNotFoundError:
        raise MapSpecError(f"Map spec file not found: {reference}", witness={"path": reference})
    except yaml.YAMLError as e:
        raise MapSpecError(f"Map spec {reference} is not valid YAML: {e}", witness={"path": reference})
    return map_from_spec(data, name=reference)


# -- payload builders ------------------------------------------------------------


def well_defined_model(phi: RingMap) -> models.WellDefinedCertificate:
    result = check_well_defined(phi)
    entries = [
        models.MembershipEntry(generator=str(e.generator), image=str(e.image), normal_form=str(e.normal_form))
        for e in result.entries
    ]
    bad = result.counterexample
    counterexample = None
    if bad is not None:
        counterexample = models.MembershipEntry(
            generator=str(bad.generator), image=str(bad.image), normal_form=str(bad.normal_form)
        )
    return models.WellDefinedCertificate(certified=result.certified, entries=entries, counterexample=counterexample)


def example_model(key: str, params: Sequence[int]) -> models.ExampleReport:
    example = build_named_example(key, params)
    report = models.ExampleReport(
        key=example.key,
        params=list(example.params),
        provenance=example.provenance,
        polynomials={name: str(p) for name, p in example.polynomials.items()},
        notes=example.notes,
    )
    if example.ring is not None:
        report.ring = {
            "variables": list(example.ring.ambient.variables),
            "relations": [str(g) for g in example.ring.ideal.generators],
        }
    if example.ring_map is not None:
        report.images = example.ring_map.images_as_dict()
    if example.matrix is not None:
        report.matrix = example.matrix.as_strings()
    if example.grading is not None:
        report.grading = example.grading.as_lists()
        row_names = example.notes.get("grading_rows")
        if row_names and example.ring is not None:
            found = grading_discovery_report(example.ring.ideal, dict(zip(row_names, example.grading.weights)))
            report.grading_discovery = models.GradingDiscoveryReport(
                rank=found.rank,
                rows=found.grading.as_lists(),
                consistent=found.consistent,
                checks=[
                    models.RowCheckModel(
                        name=c.name,
                        row=list(c.row),
                        homogeneous=c.homogeneous,
                        witness=c.witness,
                        degrees=[list(d) for d in c.degrees] if c.degrees else None,
                    )
                    for c in found.checks
                ],
            )
    return report


# -- subcommands -----------------------------------------------------------------


def cmd_groebner(args) -> models.CommandResult:
    ring = PolyRing.of(_split_names(args.ring))
    order = monomial_order(args.order)
    I = Ideal.of(ring, [parse_polynomial(text, ring) for text in args.ideal])
    G = reduced_groebner(I, order)
    report = models.GroebnerReport(
        ring=list(ring.variables),
        order=order_name(order),
        generators=[str(g) for g in I.generators],
        basis=[str(g) for g in G.basis],
        s_pairs=G.s_pairs,
        reduced=G.is_reduced(),
        s_pairs_reduce_to_zero=G.all_s_pairs_reduce_to_zero(),
    )
    return models.CommandResult(command="groebner", payload=report.model_dump(mode="json"))


def cmd_kernel(args) -> models.CommandResult:
    phi = load_map(args.map)
    certificate = well_defined_model(phi)
    report = models.KernelReport(
        name=phi.name,
        source=str(phi.source),
        target=str(phi.target),
        images=phi.images_as_dict(),
        well_defined=certificate,
    )
    if not certificate.certified:
        payload = report.model_dump(mode="json")
        payload["witness"] = certificate.counterexample.model_dump(mode="json")
        return models.CommandResult(command="kernel", status=models.STATUS_REFUTED, payload=payload)
    found = kernel(phi)
    report.kernel = [str(g) for g in found.generators]
    report.injective = is_subset(found, phi.source.ideal)
    return models.CommandResult(command="kernel", payload=report.model_dump(mode="json"))


def cmd_verify_splitting(args) -> models.CommandResult:
    phi = load_map(args.map)
    bound = args.bound if args.bound is not None else get_settings().splitting_degree_bound
    if args.splitting == "semigroup":
        excluded = [tuple(_int_list(e, "Excluded exponent")) for e in args.exclude or []]
        spec = make_semigroup_projection(phi, bound, excluded)
    elif args.splitting == "trace":
        spec = make_trace_split(phi)
    else:
        spec = ZeroSplitting(phi)
    report = verify_splitting(phi, spec, bound)
    violations = [
        models.ViolationModel(generator=v.generator, monomial=str(v.monomial), lhs=str(v.lhs), rhs=str(v.rhs))
        for v in report.linearity_violations[:VIOLATION_LIMIT]
    ]
    model = models.SplittingReportModel(
        map_name=phi.name,
        splitting=spec.describe(),
        sigma_of_one=str(report.sigma_of_one),
        unit_preserved=report.unit_preserved,
        degree_bound=report.degree_bound,
        checks=report.checks,
        verdict=report.verdict,
        violation_count=len(report.linearity_violations),
        violations=violations,
    )
    payload = model.model_dump(mode="json")
    if report.verdict == VERIFIED:
        return models.CommandResult(command="verify-splitting", payload=payload)
    if violations:
        payload["witness"] = violations[0].model_dump(mode="json")
    else:
        payload["witness"] = {"sigma_of_one": str(report.sigma_of_one)}
    return models.CommandResult(command="verify-splitting", status=models.STATUS_REFUTED, payload=payload)


def cmd_invariants(args) -> models.CommandResult:
    try:
        rows = yaml.safe_load(args.weights)
    except yaml.YAMLError as e:
        raise BadParameters(f"Weights must be a matrix like [[1,-1]]: {e}")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise BadParameters(f"Weights must be a nonempty list of rows, got {args.weights!r}")
    action = TorusAction.from_rows(rows)
    names = _split_names(args.vars) if args.vars else default_variable_names(action.arity)
    if len(names) != action.arity:
        raise BadParameters(f"{len(names)} variable names for {action.arity} weight columns")
    ring = PolyRing.of(names)
    bound = args.bound if args.bound is not None else get_settings().torus_degree_bound
    monomials = invariant_monomials(action, bound)
    generators = monoid_minimal_generators(action, bound)
    report = models.InvariantsReport(
        variables=names,
        weights=action.grading.as_lists(),
        degree_bound=bound,
        invariants=[str(ring.monomial(m)) for m in monomials],
        generators=[str(ring.monomial(g)) for g in generators.generators],
        complete_up_to=generators.complete_up_to,
    )
    return models.CommandResult(command="invariants", payload=report.model_dump(mode="json"))


def cmd_analyze_cubic(args) -> models.CommandResult:
    ring = PolyRing.of(_split_names(args.vars))
    F = parse_polynomial(args.poly, ring)
    verdict = cubic_verdict(F)
    points = [
        models.SingularPointModel(
            point=r.coordinates(),
            chart=r.chart,
            milnor=r.milnor,
            milnor_method=r.milnor_method,
            hessian_corank=r.hessian_corank,
            ade_type=str(r.ade_type),
            local_equation=str(r.local_equation),
        )
        for r in verdict.reports
    ]
    model = models.SurfaceVerdictModel(
        polynomial=str(F),
        verdict=verdict.verdict,
        configuration=list(verdict.configuration),
        label=verdict.label,
        mu_sum=verdict.mu_sum,
        justification=verdict.justification,
        points=points,
    )
    payload = model.model_dump(mode="json")
    if verdict.verdict in OK_VERDICTS:
        return models.CommandResult(command="analyze-cubic", payload=payload)
    payload["witness"] = {
        "verdict": verdict.verdict,
        "configuration": list(verdict.configuration),
        "mu_sum": verdict.mu_sum,
    }
    return models.CommandResult(command="analyze-cubic", status=models.STATUS_REFUTED, payload=payload)


def cmd_example(args) -> models.CommandResult:
    report = example_model(args.key, args.params)
    return models.CommandResult(command="example", payload=report.model_dump(mode="json"))


def cmd_veronese(args) -> models.CommandResult:
    weights = _int_list(args.weights, "Weights") if args.weights else None
    presented, embedding = veronese_presentation(args.vars, weights, args.degree)
    report = models.VeroneseReport(
        n_vars=args.vars,
        weights=list(weights) if weights else [1] * args.vars,
        degree=args.degree,
        generators=embedding.images_as_dict(),
        relations=[str(g) for g in presented.ideal.generators],
    )
    return models.CommandResult(command="veronese", payload=report.model_dump(mode="json"))


# -- dispatch --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="summand-lab", description="Exact tools for direct summands of polynomial rings")
    parser.add_argument("--timing", action="store_true", help="include timing_ms in the JSON result")
    parser.add_argument("--log-level", default=None, help="override the configured log level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("groebner", help="reduced Groebner basis of an ideal")
    p.add_argument("--ring", required=True, help="comma-separated variables, e.g. x,y,z")
    p.add_argument("--ideal", required=True, nargs="+", help="generators, one polynomial per argument")
    p.add_argument("--order", default="degrevlex", help="lex, degrevlex, block:k or weight:w1,w2,...")
    p.set_defaults(handler=cmd_groebner)

    p = sub.add_parser("kernel", help="well-definedness and kernel of a ring map")
    p.add_argument("--map", required=True, help="YAML map spec or example:<key>[:params]")
    p.set_defaults(handler=cmd_kernel)

    p = sub.add_parser("verify-splitting", help="bounded check of a candidate splitting")
    p.add_argument("--map", required=True, help="YAML map spec or example:<key>[:params]")
    p.add_argument("--splitting", default="semigroup", choices=SPLITTING_KINDS)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--exclude", action="append", help="exponent forced to zero, e.g. 1,1 (repeatable)")
    p.set_defaults(handler=cmd_verify_splitting)

    p = sub.add_parser("invariants", help="weight-zero monomials of a diagonal torus action")
    p.add_argument("--weights", required=True, help="weight matrix, e.g. [[1,-1]]")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--vars", default=None, help="comma-separated variable names")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("analyze-cubic", help="singularities and summand verdict of a cubic surface")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", default=DEFAULT_CUBIC_VARIABLES)
    p.set_defaults(handler=cmd_analyze_cubic)

    p = sub.add_parser("example", help="materialize a named example")
    p.add_argument("key")
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("veronese", help="presentation of a Veronese subring")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--weights", default=None, help="comma-separated positive weights")
    p.set_defaults(handler=cmd_veronese)

    return parser


def _error_result(command: str, e: SummandLabError) -> models.CommandResult:
    payload: Dict[str, Any] = {}
    if e.witness is not None:
        payload["witness"] = e.witness
    return models.CommandResult(
        command=command, status=models.STATUS_ERROR, payload=payload, error_code=e.code, message=e.message
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> models.CommandResult:
    """Parse ``argv`` and run the chosen subcommand; never raises for library errors."""
    started = time.perf_counter()
    command = "unknown"
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        result = args.handler(args)
    except SummandLabError as e:
        logger.info(f"{command} failed: {e.code}: {e.message}")
        result = _error_result(command, e)
    except Exception as e:
        logger.error(f"Unexpected failure in {command}: {e}", exc_info=True)
        result = models.CommandResult(command=command, status=models.STATUS_ERROR, error_code="internal", message=str(e))
    result.timing_ms = round((time.perf_counter() - started) * 1000.0, 3)
    return result


def render(result: models.CommandResult, include_timing: bool, indent: Optional[int] = 2) -> str:
    data = result.model_dump(mode="json", exclude_none=True)
    if not include_timing:
        data.pop("timing_ms", None)
    return json.dumps(data, sort_keys=True, indent=indent or None)


def _wants_timing(argv: Sequence[str]) -> bool:
    return "--timing" in argv


def _log_level(argv: Sequence[str], default: str) -> str:
    for i, arg in enumerate(argv):
        if arg == "--log-level" and i + 1 < len(argv):
            return argv[i + 1].upper()
        if arg.startswith("--log-level="):
            return arg.split("=", 1)[1].upper()
    return default


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = get_settings()
    except SummandLabError as e:
        print(render(_error_result("settings", e), False), file=sys.stdout)
        print(f"settings: error ({e.code})", file=sys.stderr)
        return models.EXIT_CODES[models.STATUS_ERROR]

    logging.basicConfig(
        level=_log_level(argv, settings.log_level),
        format=settings.log_format,
        stream=sys.stderr,
    )
    if not settings.log_to_console:
        logging.getLogger().setLevel(logging.WARNING)

    result = dispatch(argv)
    print(render(result, _wants_timing(argv) or settings.include_timing, settings.cli_indent))
    summary = f"{result.command}: {result.status}"
    if result.error_code:
        summary += f" ({result.error_code}: {result.message})"
    print(f"{summary} in {result.timing_ms:.1f} ms", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
