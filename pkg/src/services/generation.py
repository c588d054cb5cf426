"""Generation of cohomology modules from a single monomial.

Two strategies: explicit lift operators with a membership certificate for
every target, and closure of the span under the 𝔄 generating set.
"""

# stdlib
import logging
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

# first party
from src import linalg
from src.errors import ModuleError, StructuralError
from src.models.module_vector import Monomial, ModuleVector
from src.models.reports import GenerationReport
from src.models.ring_spec import RingKind, RingSpec
from src.models.weight_module import ModuleKind, WeightModule
from src.models.weyl import WeylElement
from src.services.lie_realization import a_ell_generating_set
from src.services.toric_rings import is_member
from src.utils import falling_factorial, format_fraction

logger = logging.getLogger(__name__)

STRATEGIES = ("certificate", "closure")


def module_generator(kind: ModuleKind, n: int, ell: int) -> Monomial:
    """The monomial each family is generated by."""
    if kind == ModuleKind.H0_RESX:
        if ell > 0:
            return (0,) * (n - 1) + (ell, 0)
        if ell % 2 == 0:
            return (0,) * n + (-ell // 2,)
        return (0,) * (n - 1) + (1, -(ell - 1) // 2)
    if kind == ModuleKind.HTOP_RESX:
        return (ell + n - 1,) + (-1,) * (n - 1) + (0,)
    if kind == ModuleKind.H0_Y:
        return (0,) * n + (ell // 2,)
    return (ell + n + 1,) + (-1,) * n


def lift_operator(v: Monomial, t: Monomial) -> WeylElement:
    """Normal-ordered operator D with D·Q^v = Q^t.

    Per variable: P_i^{v_i} then Q_i^{t_i} when v_i >= 0, else
    P_i^{-t_i-1} then Q_i^{-v_i-1}; scaled by the inverse of the falling
    factorials the derivatives produce.

    Raises:
        ModuleError: If a target exponent cannot be reached from v.
    """
    if len(v) != len(t):
        raise StructuralError(f"Exponent lengths differ: {v} vs {t}")
    n = len(v) - 1
    mu: List[int] = []
    nu: List[int] = []
    scale = Fraction(1)
    for vi, ti in zip(v, t):
        a, s = (vi, ti) if vi >= 0 else (-ti - 1, -vi - 1)
        if a < 0:
            raise ModuleError(f"Q^{list(t)} is not reachable from Q^{list(v)}")
        scale *= falling_factorial(vi, a)
        mu.append(s)
        nu.append(a)
    return WeylElement.monomial(n, mu, nu, coeff=1 / scale, laurent=mu[n] < 0)


def displayed_prefactor(n: int, ell: int, target: Monomial) -> Fraction:
    """The closed-form normalization printed for the top-degree operators.

    (−1)^{μ_1+…+μ_n+n} / (Π_{i=0}^{−μ_1}(ℓ+n−1−i) · Π_{j≥2}(−(μ_j+1))!)
    """
    denominator = 1
    for i in range(-target[0] + 1):
        denominator *= ell + n - 1 - i
    for mu_j in target[1:n]:
        denominator *= math.factorial(-(mu_j + 1))
    return Fraction((-1) ** ((sum(target[:n]) + n) % 2), denominator)


def operator_ring(M: WeightModule) -> RingSpec:
    kind = RingKind.RESOLUTION_X if M.kind.on_resolution else RingKind.WEIGHTED_Y
    return RingSpec(kind, M.rank, M.twist)


def _require_member(M: WeightModule, v: Monomial) -> None:
    if not M.contains(tuple(v)):
        raise ModuleError(
            f"Q^{list(v)} is not in {M.kind.value}(n={M.rank}, ell={M.twist}) window {M.window}"
        )


def _certificate(M: WeightModule, v: Monomial) -> GenerationReport:
    ring = operator_ring(M)
    report = GenerationReport(strategy="certificate", generator=list(v), generated=False)
    source = ModuleVector.monomial(v)
    failed_weights = set()
    for t in M.monomials():
        entry: Dict[str, object] = {"target": list(t)}
        try:
            op = lift_operator(v, t)
        except (ModuleError, StructuralError) as e:
            report.failures.append(str(e))
            failed_weights.add(M.weight_of(t))
            continue
        member = is_member(op, ring)
        maps = M.act(op, source) == ModuleVector.monomial(t)
        entry.update(operator=op.to_text(), member=member, maps_to_target=maps)
        if M.kind == ModuleKind.HTOP_RESX:
            coeff = next(op.iter_terms()).coeff
            displayed = displayed_prefactor(M.rank, M.twist, t)
            entry.update(
                coefficient=format_fraction(coeff),
                displayed_coefficient=format_fraction(displayed),
                displayed_matches=displayed == coeff,
            )
        report.certificates.append(entry)
        if not (member and maps):
            report.failures.append(f"Q^{list(t)}: member={member} maps={maps}")
            failed_weights.add(M.weight_of(t))
    report.covered_weights = [w for w in M.weights if w not in failed_weights]
    report.generated = not report.failures
    return report


def _closure(M: WeightModule, v: Monomial) -> GenerationReport:
    report = GenerationReport(strategy="closure", generator=list(v), generated=False)
    generating = [op for _, op in a_ell_generating_set(M.realization)]
    lo, hi = M.window
    spans: Dict[int, List[List[Fraction]]] = {}
    start = M.weight_of(v)
    basis = M.basis_at(start)
    spans[start] = [ModuleVector.monomial(v).coordinates(list(basis))]
    pending = {start}
    while pending:
        weight = pending.pop()
        basis = list(M.basis_at(weight))
        vectors = [ModuleVector.from_coordinates(basis, row) for row in spans[weight]]
        for op in generating:
            target = weight + M.weight_shift(op)
            if not lo <= target <= hi or M.dimension(target) == 0:
                continue
            target_basis = list(M.basis_at(target))
            rows = spans.get(target, []) + [
                M.act(op, x).coordinates(target_basis) for x in vectors
            ]
            reduced = linalg.row_basis(rows, len(target_basis))
            if len(reduced) > len(spans.get(target, [])):
                spans[target] = reduced
                pending.add(target)
    report.covered_weights = [
        w for w in M.weights if len(spans.get(w, [])) == M.dimension(w)
    ]
    missing = [
        w for w in M.weights if M.is_trusted(w) and w not in report.covered_weights
    ]
    report.failures = [
        f"weight {w}: span {len(spans.get(w, []))} of {M.dimension(w)}" for w in missing
    ]
    report.generated = not missing
    return report


def check_generation(
    M: WeightModule, v: Sequence[int], strategy: str = "certificate"
) -> GenerationReport:
    """Check that the monomial Q^v generates M over the window.

    Raises:
        ModuleError: If Q^v is not a basis monomial of M.
        ValueError: For an unknown strategy.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Invalid strategy: {strategy}. Valid strategies are: {STRATEGIES}")
    v = tuple(v)
    _require_member(M, v)
    report = _certificate(M, v) if strategy == "certificate" else _closure(M, v)
    logger.info(
        "Generation checked",
        extra={
            "kind": M.kind.value,
            "n": M.rank,
            "ell": M.twist,
            "strategy": strategy,
            "generated": report.generated,
        },
    )
    return report


def displayed_agreement(report: GenerationReport) -> Optional[bool]:
    """Whether every displayed prefactor matched; None when none was recorded."""
    flags = [c["displayed_matches"] for c in report.certificates if "displayed_matches" in c]
    return all(flags) if flags else None
