"""Weight-space structure of cohomology modules: sl_n pieces and primitivity."""

# stdlib
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

# first party
from src import linalg
from src.models.module_vector import Monomial, ModuleVector
from src.models.reports import (
    ChainReport,
    ChainStep,
    DecompositionReport,
    PrimitiveSubspace,
    WeightSpaceReport,
)
from src.models.weight_module import WeightModule
from src.models.weyl import WeylElement

logger = logging.getLogger(__name__)


def sl_dimension(profile: Sequence[Fraction]) -> Optional[int]:
    """Weyl dimension of the sl_n irreducible with Dynkin labels ``profile``.

    Returns None unless every label is a nonnegative integer.
    """
    labels = [Fraction(c) for c in profile]
    if any(c < 0 or c.denominator != 1 for c in labels):
        return None
    n = len(labels) + 1
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(sum(labels[i:j]) + (j - i), j - i)
    return int(dim)


def sl_label(profile: Sequence[Fraction]) -> str:
    parts = [f"{int(c)}w_{i}" for i, c in enumerate(profile, start=1) if c != 0]
    return f"L({' + '.join(parts)})" if parts else "L(0)"


def _vector(basis: Sequence[Monomial], coords: Sequence[Fraction]) -> ModuleVector:
    return ModuleVector.from_coordinates(list(basis), coords)


def _single_monomial(v: ModuleVector) -> Optional[List[int]]:
    support = v.support()
    return list(support[0]) if len(support) == 1 else None


def eigenvalues(M: WeightModule, ops: Sequence[WeylElement], v: ModuleVector) -> Optional[List[Fraction]]:
    """Eigenvalues of ``ops`` on ``v`` computed by applying them; None if any is not."""
    values: List[Fraction] = []
    for op in ops:
        c = M.act(op, v).proportional_to(v)
        if c is None:
            return None
        values.append(c)
    return values


def cartan_profile(M: WeightModule, v: ModuleVector) -> Optional[List[Fraction]]:
    """sl_n Dynkin labels of an h_1..h_{n−1} eigenvector."""
    return eigenvalues(M, M.sl_cartan(), v)


def singular_vectors(M: WeightModule, weight: int) -> List[ModuleVector]:
    """Basis of the vectors of M^λ killed by e_1..e_{n−1}."""
    basis = M.basis_at(weight)
    rows = M.stacked_matrix(M.sl_raising(), weight)
    return [_vector(basis, c) for c in linalg.nullspace(rows, len(basis))]


def is_singular(M: WeightModule, v: ModuleVector) -> bool:
    return all(M.act(e, v).is_zero() for e in M.sl_raising())


def find_primitive(M: WeightModule) -> List[PrimitiveSubspace]:
    """Per weight, the joint kernel of the raising generators on M^λ.

    Weights whose space is zero are left out. The kernel is sl_n-stable; its
    own sl_n-singular monomials are listed as highest-weight vectors.
    """
    found: List[PrimitiveSubspace] = []
    raising = [op for _, op in M.raising_operators()]
    for weight in M.weights:
        basis = M.basis_at(weight)
        rows = M.stacked_matrix(raising, weight)
        kernel = linalg.nullspace(rows, len(basis))
        if not kernel:
            continue
        joint = linalg.nullspace(rows + M.stacked_matrix(M.sl_raising(), weight), len(basis))
        hw = [_single_monomial(_vector(basis, c)) for c in joint]
        found.append(
            PrimitiveSubspace(
                weight=weight,
                basis=[str(_vector(basis, c)) for c in kernel],
                dimension=len(kernel),
                highest_weight_vectors=[m for m in hw if m is not None],
                trusted=M.is_trusted(weight),
            )
        )
    logger.debug(
        "Primitive subspaces",
        extra={
            "kind": M.kind.value,
            "n": M.rank,
            "ell": M.twist,
            "weights": [p.weight for p in found],
        },
    )
    return found


def _single_top_primitive(M: WeightModule, primitives: List[PrimitiveSubspace]) -> bool:
    if M.is_empty():
        return False
    trusted = [p for p in primitives if p.trusted]
    return len(trusted) == 1 and trusted[0].weight == M.top_weight


def check_irreducible(M: WeightModule) -> bool:
    """Exactly one trusted primitive subspace, sitting at the top weight."""
    return _single_top_primitive(M, find_primitive(M))


def _weight_report(M: WeightModule, weight: int, primitive: bool) -> WeightSpaceReport:
    singular = singular_vectors(M, weight)
    report = WeightSpaceReport(
        weight=weight,
        dimension=M.dimension(weight),
        singular_vectors=[str(v) for v in singular],
        primitive=primitive,
        trusted=M.is_trusted(weight),
    )
    if not report.trusted:
        report.notes.append("window boundary")
    if len(singular) != 1:
        report.notes.append(f"ambiguous: {len(singular)} singular lines")
        return report
    v = singular[0]
    report.highest_weight_vector = _single_monomial(v)
    profile = cartan_profile(M, v)
    report.profile = profile
    if profile is None:
        report.notes.append("singular vector is not an h-eigenvector")
        return report
    report.label = sl_label(profile)
    report.label_dimension = sl_dimension(profile)
    report.identified = report.label_dimension == report.dimension
    if not report.identified:
        report.notes.append(
            f"label dimension {report.label_dimension} != {report.dimension}"
        )
    return report


def weight_decompose(M: WeightModule) -> DecompositionReport:
    """Dimensions, sl_n identification and primitivity per weight of the window."""
    primitives = find_primitive(M)
    primitive_weights = [p.weight for p in primitives]
    report = DecompositionReport(
        kind=M.kind.value,
        rank=M.rank,
        twist=M.twist,
        window=M.window,
        primitive_weights=primitive_weights,
        irreducible=_single_top_primitive(M, primitives),
    )
    for weight in M.weights:
        report.weights.append(_weight_report(M, weight, weight in primitive_weights))
    logger.info(
        "Weight decomposition",
        extra={
            "kind": M.kind.value,
            "n": M.rank,
            "ell": M.twist,
            "dims": [w.dimension for w in report.weights],
            "irreducible": report.irreducible,
        },
    )
    return report


def check_lemma_hw_chain(M: WeightModule, start: Optional[ModuleVector] = None) -> ChainReport:
    """Lower a highest-weight vector with f_n and check each image stays singular.

    Each nonzero f_n^m v must be killed by e_1..e_{n−1} and carry the
    profile of v with the last label raised by 2m. The chain stops at zero
    or when it leaves the window.
    """
    if start is None:
        top = M.top_weight
        singular = singular_vectors(M, top) if top is not None else []
        if len(singular) != 1:
            return ChainReport(start=[])
        start = singular[0]
    base = cartan_profile(M, start) or []
    report = ChainReport(
        start=_single_monomial(start) or [],
        module_finite=M.kind.finite,
    )
    lo, _ = M.window
    v = start
    m = 0
    while True:
        if v.is_zero():
            report.terminates = True
            break
        weight = M.weight_of(v.support()[0])
        if weight < lo:
            break
        expected = list(base)
        if expected:
            expected[-1] += 2 * m
        report.steps.append(
            ChainStep(
                step=m,
                weight=weight,
                vector=str(v),
                singular=is_singular(M, v),
                profile=cartan_profile(M, v),
                expected_profile=expected,
            )
        )
        v = M.act(M.lowering, v)
        m += 1
    report.reaches_all_weights = {s.weight for s in report.steps} >= set(M.weights)
    logger.debug(
        "Highest-weight chain",
        extra={
            "kind": M.kind.value,
            "n": M.rank,
            "ell": M.twist,
            "steps": len(report.steps),
            "terminates": report.terminates,
        },
    )
    return report
