# stdlib
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

# first party
from src.utils import format_fraction


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ERROR = "error"


class LiftStatus(str, enum.Enum):
    LIFTED = "lifted"
    NOT_APPLICABLE = "not-applicable"
    FAILED = "failed"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


class ReportMixin:
    """``to_dict`` for report dataclasses: exact rationals become "p/q"."""

    def to_dict(self) -> Dict[str, Any]:
        return {
            name: _jsonable(getattr(self, name))
            for name in self.__dataclass_fields__  # type: ignore[attr-defined]
        }


@dataclass
class RelationCheck(ReportMixin):
    relation: str
    lhs: str
    rhs: str
    status: CheckStatus


@dataclass
class RelationReport(ReportMixin):
    """Outcome of a batch of exact bracket identities."""

    name: str
    rank: int
    twist: Optional[int] = None
    checks: List[RelationCheck] = field(default_factory=list)
    cartan_matrix: Optional[List[List[int]]] = None
    expected_cartan_matrix: Optional[List[List[int]]] = None
    skipped: List[str] = field(default_factory=list)

    def add(self, relation: str, lhs: Any, rhs: Any, ok: bool) -> bool:
        self.checks.append(
            RelationCheck(
                relation=relation,
                lhs=str(lhs),
                rhs=str(rhs),
                status=CheckStatus.PASS if ok else CheckStatus.FAIL,
            )
        )
        return ok

    @property
    def failures(self) -> List[RelationCheck]:
        return [c for c in self.checks if c.status != CheckStatus.PASS]

    @property
    def passed(self) -> bool:
        if self.failures:
            return False
        if self.expected_cartan_matrix is not None:
            return self.cartan_matrix == self.expected_cartan_matrix
        return True


@dataclass
class MonomialSpan(ReportMixin):
    monomial: str
    order: int
    spanned: bool
    certificate: List[Dict[str, str]] = field(default_factory=list)


@dataclass
class SpanReport(ReportMixin):
    ring: str
    rank: int
    twist: Optional[int]
    max_order: int
    max_word_len: int
    word_count: int = 0
    entries: List[MonomialSpan] = field(default_factory=list)
    minimal_word_length: Dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def all_spanned(self) -> bool:
        return all(e.spanned for e in self.entries)


@dataclass
class WeightSpaceReport(ReportMixin):
    weight: int
    dimension: int
    singular_vectors: List[str] = field(default_factory=list)
    highest_weight_vector: Optional[List[int]] = None
    profile: Optional[List[Fraction]] = None
    label: Optional[str] = None
    label_dimension: Optional[int] = None
    identified: bool = False
    primitive: bool = False
    trusted: bool = True
    notes: List[str] = field(default_factory=list)


@dataclass
class DecompositionReport(ReportMixin):
    kind: str
    rank: int
    twist: int
    window: Optional[Tuple[int, int]]
    weights: List[WeightSpaceReport] = field(default_factory=list)
    primitive_weights: List[int] = field(default_factory=list)
    irreducible: Optional[bool] = None
    generator: Optional[List[int]] = None
    lift_status: Optional[LiftStatus] = None

    @property
    def is_empty(self) -> bool:
        return not self.weights

    def weight(self, value: int) -> Optional[WeightSpaceReport]:
        for w in self.weights:
            if w.weight == value:
                return w
        return None


@dataclass
class PrimitiveSubspace(ReportMixin):
    weight: int
    basis: List[str]
    dimension: int
    highest_weight_vectors: List[List[int]]
    trusted: bool


@dataclass
class GenerationReport(ReportMixin):
    strategy: str
    generator: List[int]
    generated: bool
    covered_weights: List[int] = field(default_factory=list)
    certificates: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)


@dataclass
class LiftReport(ReportMixin):
    status: LiftStatus
    checked_vectors: int = 0
    bracket_checks: int = 0
    rminus_checks: int = 0
    failures: List[str] = field(default_factory=list)
    primitive_vector: Optional[List[int]] = None
    cartan_profile: Optional[List[Fraction]] = None
    reason: Optional[str] = None


@dataclass
class ChainStep(ReportMixin):
    step: int
    weight: int
    vector: str
    singular: bool
    profile: Optional[List[Fraction]]
    expected_profile: List[Fraction]


@dataclass
class ChainReport(ReportMixin):
    start: List[int]
    steps: List[ChainStep] = field(default_factory=list)
    terminates: bool = False
    reaches_all_weights: bool = False
    module_finite: bool = False

    @property
    def lemma_holds(self) -> bool:
        return all(s.singular and s.profile == s.expected_profile for s in self.steps)

    @property
    def consistent(self) -> bool:
        return self.terminates == self.module_finite


@dataclass
class OrbitReport(ReportMixin):
    rank: int
    even_weight: List[Fraction]
    odd_weight: List[Fraction]
    even_shifted: List[Fraction]
    odd_shifted: List[Fraction]
    orbit_size: int
    same_orbit: bool


@dataclass
class RegularFunctionsReport(ReportMixin):
    """Multiplication by Q_{n+1}^shift from the twist-0 module onto H⁰ at twist ℓ."""

    rank: int
    twist: int
    shift: int
    weights: List[int] = field(default_factory=list)
    basis_checks: int = 0
    action_checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.basis_checks > 0 and not self.failures


@dataclass
class DivisorImage(ReportMixin):
    twist: int
    coefficients: Dict[str, int]
    class_multiple_of_d1: int
    cartier: bool


@dataclass
class IsoReport(ReportMixin):
    rank: int
    twist: int
    max_order: int
    forward_checked: int = 0
    backward_checked: int = 0
    forward_failures: List[str] = field(default_factory=list)
    backward_failures: List[str] = field(default_factory=list)
    generator_table: List[Dict[str, Any]] = field(default_factory=list)
    generator_counts: Dict[str, List[int]] = field(default_factory=dict)
    euler_maps_to_euler: bool = False
    displayed_values: List[Dict[str, Any]] = field(default_factory=list)
    divisor: Optional[DivisorImage] = None

    @property
    def passed(self) -> bool:
        counts = self.generator_counts
        return (
            not self.forward_failures
            and not self.backward_failures
            and counts.get("source") == counts.get("image")
            and all(row["member"] for row in self.generator_table)
            and self.euler_maps_to_euler
        )


@dataclass
class CaseResult(ReportMixin):
    """One (suite, ℓ) outcome with its detail payload."""

    twist: Optional[int]
    status: CheckStatus
    summary: str
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class SuiteResult(ReportMixin):
    name: str
    rank: int
    cases: List[CaseResult] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        active = [c for c in self.cases if c.status != CheckStatus.SKIPPED]
        return bool(active) and all(c.status == CheckStatus.PASS for c in active)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["passed"] = self.passed
        return data


@dataclass
class RunManifest(ReportMixin):
    config: Dict[str, Any]
    suites: Dict[str, bool] = field(default_factory=dict)
    artifacts: Dict[str, str] = field(default_factory=dict)
    timing: Optional[Dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return bool(self.suites) and all(self.suites.values())

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.timing is None:
            data.pop("timing")
        data["passed"] = self.passed
        return data

