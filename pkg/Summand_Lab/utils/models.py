"""
Result models for Summand Lab
Pydantic payloads for everything the command line prints; polynomials are
carried as their canonical strings
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

STATUS_OK = "ok"
STATUS_REFUTED = "refuted"
STATUS_ERROR = "error"

EXIT_CODES = {STATUS_OK: 0, STATUS_REFUTED: 1, STATUS_ERROR: 2}


class CommandResult(BaseModel):
    command: str
    status: str = STATUS_OK
    payload: Dict[str, Any] = Field(default_factory=dict)
    error_code: Optional[str] = None
    message: Optional[str] = None
    timing_ms: Optional[float] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class GroebnerReport(BaseModel):
    ring: List[str]
    order: str
    generators: List[str]
    basis: List[str]
    s_pairs: int
    reduced: bool
    s_pairs_reduce_to_zero: bool


class MembershipEntry(BaseModel):
    generator: str
    image: str
    normal_form: str


class WellDefinedCertificate(BaseModel):
    certified: bool
    entries: List[MembershipEntry] = Field(default_factory=list)
    counterexample: Optional[MembershipEntry] = None


class KernelReport(BaseModel):
    name: str
    source: str
    target: str
    images: Dict[str, str]
    well_defined: WellDefinedCertificate
    kernel: List[str] = Field(default_factory=list)
    injective: Optional[bool] = None


class ViolationModel(BaseModel):
    generator: str
    monomial: str
    lhs: str
    rhs: str


class SplittingReportModel(BaseModel):
    map_name: str
    splitting: Dict[str, Any]
    sigma_of_one: str
    unit_preserved: bool
    degree_bound: int
    checks: int
    verdict: str
    violation_count: int = 0
    violations: List[ViolationModel] = Field(default_factory=list)


class SingularPointModel(BaseModel):
    point: List[str]
    chart: str
    milnor: int
    milnor_method: str
    hessian_corank: int
    ade_type: str
    local_equation: str


class SurfaceVerdictModel(BaseModel):
    polynomial: str
    verdict: str
    configuration: List[str]
    label: str
    mu_sum: int
    justification: str
    points: List[SingularPointModel] = Field(default_factory=list)


class InvariantsReport(BaseModel):
    variables: List[str]
    weights: List[List[int]]
    degree_bound: int
    invariants: List[str]
    generators: List[str]
    complete_up_to: int


class RowCheckModel(BaseModel):
    name: str
    row: List[int]
    homogeneous: bool
    witness: Optional[str] = None
    degrees: Optional[List[List[int]]] = None


class GradingDiscoveryReport(BaseModel):
    rank: int
    rows: List[List[int]]
    consistent: bool
    checks: List[RowCheckModel] = Field(default_factory=list)


class VeroneseReport(BaseModel):
    n_vars: int
    weights: List[int]
    degree: int
    generators: Dict[str, str]
    relations: List[str]


class ExampleReport(BaseModel):
    key: str
    params: List[int] = Field(default_factory=list)
    provenance: str
    ring: Optional[Dict[str, Any]] = None
    images: Optional[Dict[str, str]] = None
    matrix: Optional[List[List[str]]] = None
    grading: Optional[List[List[int]]] = None
    polynomials: Dict[str, str] = Field(default_factory=dict)
    notes: Dict[str, Any] = Field(default_factory=dict)
    grading_discovery: Optional[GradingDiscoveryReport] = None
