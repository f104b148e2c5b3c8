"""
Named examples
Deterministic constructors for the rings, maps, matrices and surfaces the
lab works with, addressed by stable keys
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ...utils.errors import BadParameters, UnknownExample
from ..graded.grading import MultiGrading
from ..groebner.ideal import Ideal
from ..poly_core.parser import parse_polynomial
from ..poly_core.rings import PolyRing, Polynomial
from ..ringmap.quotient import QuotientRing, RingMap
from ..torus.pfaffian import SkewMatrix, all_pfaffians
from .weyl import quadric_ring, weyl_map, weyl_target

logger = logging.getLogger(__name__)

COX_VARIABLES = ("f12", "f13", "f14", "f23", "f24", "f34", "e1", "e2", "e3", "e4")

# Upper triangle of the displayed Cox matrix, row by row.
DP5_DISPLAYED_ROWS = (
    ("f12", "f13", "f14", "f23"),
    ("f24", "f34", "e1"),
    ("e2", "e3"),
    ("e4",),
)

# Same variables placed so that (a, 5) holds e_a and (a, b) holds the line through the complementary pair.
DP5_RELABELED_ROWS = (
    ("f34", "f24", "f23", "e1"),
    ("f14", "f13", "e2"),
    ("f12", "e3"),
    ("e4",),
)

DP5_ANTICANONICAL = (
    "f12*f34^2*e3*e4",
    "f13*f23*f24*e2*e3",
    "f13*f23*f34*e3^2",
    "f13*f24^2*e2*e4",
    "f13*f24*f34*e3*e4",
    "f14*f24*f34*e4^2",
)

ANTICANONICAL_CLASS = (3, -1, -1, -1, -1)
PIC_ROW_NAMES = ("H", "E1", "E2", "E3", "E4")

CUBICS = {
    "cubic3A2": ("x^3 - y*z*w", ("A2", "A2", "A2"), "SummandToric3A2"),
    "cubicA1A5": ("y^3 + w*(x^2 + y*z)", ("A1", "A5"), "RuledOutGurjar"),
    "cubicE6": ("y^3 + w*(x^2 + z*w)", ("E6",), "RuledOutGurjar"),
}

DEL_PEZZO_QUARTICS = {
    "dp4a": (("w^2 - y*u", "x^2 - z*w"), ("A3", "A1", "A1")),
    "dp4b": (("y*z - w*u", "x^2 - w*u"), ("A1", "A1", "A1", "A1")),
}


@dataclass
class NamedExample:
    key: str
    provenance: str
    params: Tuple[int, ...] = ()
    ring: Optional[QuotientRing] = None
    ring_map: Optional[RingMap] = None
    matrix: Optional[SkewMatrix] = None
    grading: Optional[MultiGrading] = None
    polynomials: Dict[str, Polynomial] = field(default_factory=dict)
    notes: Dict[str, object] = field(default_factory=dict)


def _expect(params: Sequence[int], count: int, key: str) -> None:
    if len(params) != count:
        raise BadParameters(f"Example {key} takes {count} parameters, got {len(params)}", witness={"key": key})


def cox_pic_grading() -> MultiGrading:
    """Rows H, E1..E4: f_ij has class H - E_i - E_j and e_i has class E_i."""
    rows: List[List[int]] = [[0] * len(COX_VARIABLES) for _ in range(5)]
    for col, name in enumerate(COX_VARIABLES):
        if name.startswith("f"):
            rows[0][col] = 1
            for k in name[1:]:
                rows[int(k)][col] = -1
        else:
            rows[int(name[1:])][col] = 1
    return MultiGrading.from_rows(rows)


def _quadric(params: Sequence[int]) -> NamedExample:
    _expect(params, 1, "quadric")
    Q = quadric_ring(params[0])
    return NamedExample(
        "quadric", "quadric hypersurface x1*x2 + x3*x4 + ... (plus x_n^2 for odd n)", tuple(params), ring=Q,
        polynomials={"q": Q.ideal.generators[0]},
    )


def _segre(params: Sequence[int]) -> NamedExample:
    _expect(params, 0, "segre")
    source = QuotientRing.free(PolyRing.of("x", "y", "z", "w"), MultiGrading.standard(4))
    target = QuotientRing.free(PolyRing.of("u", "v", "s", "t"), MultiGrading.from_rows([(1, 1, 1, 1)]))
    phi = RingMap.parse(source, target, ["u*s", "u*t", "v*s", "v*t"], name="segre")
    return NamedExample(
        "segre", "Segre quadric Q4 = k[x,y,z,w]/(xw - yz) inside k[u,v,s,t]", ring=source, ring_map=phi,
        notes={"expected_kernel": ["y*z - x*w"]},
    )


def _veronese2(params: Sequence[int]) -> NamedExample:
    _expect(params, 0, "veronese2")
    source = QuotientRing.parse(["x", "y", "z"], ["x*z - y^2"], MultiGrading.standard(3))
    target = QuotientRing.free(PolyRing.of("u", "v"), MultiGrading.standard(2))
    phi = RingMap.parse(source, target, ["u^2", "u*v", "v^2"], name="veronese2")
    return NamedExample("veronese2", "Q3 = k[x,y,z]/(xz - y^2) = k[u^2, uv, v^2]", ring=source, ring_map=phi)


def xnd_map(n: int, d: int) -> RingMap:
    """k[x0..xn]/(x0^d - x1...xd) -> k[a0..a(n-1)], x0 -> a0...a(d-1), xi -> a(i-1)^d."""
    if not 1 <= d <= n:
        raise BadParameters(f"Need 1 <= d <= n, got n = {n}, d = {d}")
    source_ring = PolyRing(tuple(f"x{i}" for i in range(n + 1)))
    target_ring = PolyRing(tuple(f"a{i}" for i in range(n)))
    x = source_ring.gens
    product = source_ring.one()
    for i in range(1, d + 1):
        product = product * x[i]
    relation = x[0] ** d - product
    source = QuotientRing(source_ring, Ideal.of(source_ring, [relation]), MultiGrading.standard(n + 1))
    target = QuotientRing.free(target_ring, MultiGrading.standard(n))
    a = target_ring.gens
    first = target_ring.one()
    for i in range(d):
        first = first * a[i]
    images = (first,) + tuple(a[i] ** d for i in range(n))
    return RingMap(source, target, images, name=f"xnd({n},{d})")


def _xnd(params: Sequence[int]) -> NamedExample:
    _expect(params, 2, "xnd")
    n, d = params
    phi = xnd_map(n, d)
    return NamedExample(
        "xnd", f"X_{{{n},{d}}} = V(x0^{d} - x1...x{d}) in P^{n}, image of P^{n - 1}", tuple(params),
        ring=phi.source, ring_map=phi, polynomials={"relation": phi.source.ideal.generators[0]},
    )


def _quartic_toric(params: Sequence[int]) -> NamedExample:
    _expect(params, 0, "quartic_toric")
    phi = xnd_map(4, 4)
    return NamedExample(
        "quartic_toric", "singular quartic threefold V(x^4 - yzwu), a finite summand", ring=phi.source,
        ring_map=phi, polynomials={"relation": phi.source.ideal.generators[0]},
    )


def _weyl(params: Sequence[int]) -> NamedExample:
    _expect(params, 1, "weyl")
    c = params[0]
    target = weyl_target(c)
    phi = weyl_map(c)
    polynomials: Dict[str, Polynomial] = {}
    for i, (delta, p) in enumerate(zip(target.minors, target.products), start=1):
        polynomials[f"Delta_{i}"] = delta
        polynomials[f"p_{i}"] = p
    return NamedExample(
        "weyl", f"quadric in {2 * c + 2} variables as SL_{c} invariants of {c + 1} vectors and one covector",
        tuple(params), ring=phi.source, ring_map=phi, polynomials=polynomials,
        notes={"signs": "x_(2i-1) -> (-1)^(i+1) Delta_i, x_(2i) -> p_i", "splitting": "assumed"},
    )


def _dp5(params: Sequence[int], key: str, rows) -> NamedExample:
    _expect(params, 0, key)
    ring = PolyRing(COX_VARIABLES)
    matrix = SkewMatrix.from_upper_rows(ring, rows)
    pfaffians = all_pfaffians(matrix)
    grading = cox_pic_grading()
    polynomials = {f"pfaffian_{k}": p for k, p in enumerate(pfaffians, start=1)}
    for k, text in enumerate(DP5_ANTICANONICAL, start=1):
        polynomials[f"anticanonical_{k}"] = parse_polynomial(text, ring)
    ideal = Ideal.of(ring, pfaffians)
    homogeneous = key == "dp5cox_relabeled"
    Q = QuotientRing(ring, ideal, grading if homogeneous else None)
    return NamedExample(
        key, "Cox ring of the quintic del Pezzo: 4x4 Pfaffians of a 5x5 skew matrix", ring=Q, matrix=matrix,
        grading=grading, polynomials=polynomials,
        notes={
            "anticanonical_class": list(ANTICANONICAL_CLASS),
            "grading_rows": list(PIC_ROW_NAMES),
            "pic_homogeneous": homogeneous,
        },
    )


def _cubic(key: str) -> Callable[[Sequence[int]], NamedExample]:
    text, configuration, verdict = CUBICS[key]

    def build(params: Sequence[int]) -> NamedExample:
        _expect(params, 0, key)
        Q = QuotientRing.parse(["x", "y", "z", "w"], [text], MultiGrading.standard(4))
        return NamedExample(
            key, f"cubic surface {text}", ring=Q, polynomials={"F": Q.ideal.generators[0]},
            notes={"expected_configuration": list(configuration), "expected_verdict": verdict},
        )

    return build


def _quartic_del_pezzo(key: str) -> Callable[[Sequence[int]], NamedExample]:
    relations, configuration = DEL_PEZZO_QUARTICS[key]

    def build(params: Sequence[int]) -> NamedExample:
        _expect(params, 0, key)
        Q = QuotientRing.parse(["x", "y", "z", "w", "u"], relations, MultiGrading.standard(5))
        return NamedExample(
            key, "toric del Pezzo surface of degree 4, an intersection of two quadrics in P^4", ring=Q,
            polynomials={f"q{k}": g for k, g in enumerate(Q.ideal.generators, start=1)},
            notes={"degree": 4, "expected_configuration": list(configuration)},
        )

    return build


EXAMPLE_BUILDERS: Dict[str, Callable[[Sequence[int]], NamedExample]] = {
    "quadric": _quadric,
    "segre": _segre,
    "veronese2": _veronese2,
    "xnd": _xnd,
    "quartic_toric": _quartic_toric,
    "weyl": _weyl,
    "dp5cox": lambda params: _dp5(params, "dp5cox", DP5_DISPLAYED_ROWS),
    "dp5cox_relabeled": lambda params: _dp5(params, "dp5cox_relabeled", DP5_RELABELED_ROWS),
    "dp4a": _quartic_del_pezzo("dp4a"),
    "dp4b": _quartic_del_pezzo("dp4b"),
    "cubic3A2": _cubic("cubic3A2"),
    "cubicA1A5": _cubic("cubicA1A5"),
    "cubicE6": _cubic("cubicE6"),
}


def example_keys() -> List[str]:
    return sorted(EXAMPLE_BUILDERS)


def build_named_example(key: str, params: Sequence[int] = ()) -> NamedExample:
    """Materialize the example registered under ``key``."""
    builder = EXAMPLE_BUILDERS.get(key)
    if builder is None:
        raise UnknownExample(f"Unknown example {key!r}", witness={"known": example_keys()})
    try:
        params = tuple(int(p) for p in params)
    except (TypeError, ValueError) as e:
        raise BadParameters(f"Example parameters must be integers, got {params}") from e
    example = builder(params)
    example.params = params
    logger.info(f"Built example {key}{list(params) if params else ''}")
    return example
