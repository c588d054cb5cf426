# stdlib
import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

# first party
from src.errors import ModuleError, PreconditionError
from src.models.module_vector import ModuleVector
from src.models.reports import LiftReport, LiftStatus, OrbitReport, RegularFunctionsReport
from src.models.weight_module import ModuleKind, SupportPredicate, WeightModule
from src.models.weyl import WeylElement, apply, commutator
from src.services.decomposition import eigenvalues, find_primitive
from src.services.lie_realization import decompose

logger = logging.getLogger(__name__)


class _RplusAction:
    """x·v := (1/λ)(x z_ℓ)·v on M^λ, with the Laurent x itself at λ = 0 if allowed."""

    def __init__(self, M: WeightModule, allow_zero_weight: bool) -> None:
        self.M = M
        self.allow_zero_weight = allow_zero_weight
        self.aplus = M.raising_operators()
        self.rplus = dict(M.realization.rplus_basis())

    def __call__(self, k: int, v: ModuleVector) -> ModuleVector:
        result = ModuleVector.zero()
        for monomial, c in v.items():
            weight = self.M.weight_of(monomial)
            term = ModuleVector.monomial(monomial, c)
            name, op = self.aplus[k]
            if weight != 0:
                result = result + self.M.act(op, term).scale(Fraction(1, weight))
                continue
            if not self.allow_zero_weight:
                raise ModuleError("weight 0 needs the Laurent action")
            laurent = self.rplus.get(name.replace("aplus", "rplus"))
            if laurent is None:
                raise ModuleError(f"No Laurent counterpart for {name}")
            image = apply(laurent, term)
            outside = [m for m in image.support() if not self.M.support.contains(m)]
            if outside:
                raise ModuleError(f"{name} sends Q^{list(monomial)} outside the module")
            result = result + image
        return result


def _primitive_vector(M: WeightModule) -> Optional[Tuple[int, ...]]:
    for p in find_primitive(M):
        if p.trusted and p.weight == M.top_weight and p.highest_weight_vectors:
            return tuple(p.highest_weight_vectors[0])
    return None


def lift_to_g(M: WeightModule, allow_zero_weight: bool = False) -> LiftReport:
    """Extend the 𝔄-action to 𝔯₊ and check the sp_2n brackets on the window.

    Mixed brackets [m, x] are expanded in the raising basis from the
    realization; [x, x′] and [x, y] for y in 𝔯₋ are applied through the
    Laurent realization directly.
    """
    trusted = [w for w in M.weights if M.is_trusted(w)]
    if M.is_empty():
        return LiftReport(status=LiftStatus.NOT_APPLICABLE, reason="empty module")
    if 0 in trusted and not allow_zero_weight:
        return LiftReport(status=LiftStatus.NOT_APPLICABLE, reason="weight 0 occurs")

    action = _RplusAction(M, allow_zero_weight)
    aplus = action.aplus
    aplus_elements = [op for _, op in aplus]
    m_basis = M.realization.m_basis()
    rminus = M.realization.rminus_basis()
    report = LiftReport(status=LiftStatus.LIFTED)

    structure = {}
    for m_name, m in m_basis:
        for k, (name, op) in enumerate(aplus):
            coeffs = decompose(commutator(m, op), aplus_elements)
            if coeffs is None:
                report.failures.append(f"[{m_name},{name}] leaves the raising span")
            structure[(m_name, k)] = coeffs

    def x_act(k: int, v: ModuleVector) -> ModuleVector:
        try:
            return action(k, v)
        except ModuleError as e:
            report.failures.append(str(e))
            return ModuleVector.zero()

    for weight in trusted:
        for monomial in M.basis_at(weight):
            v = ModuleVector.monomial(monomial)
            report.checked_vectors += 1
            for m_name, m in m_basis:
                mv = M.act(m, v)
                for k, (name, _) in enumerate(aplus):
                    coeffs = structure[(m_name, k)]
                    if coeffs is None:
                        continue
                    lhs = ModuleVector.zero()
                    for j, c in enumerate(coeffs):
                        if c:
                            lhs = lhs + x_act(j, v).scale(c)
                    rhs = M.act(m, x_act(k, v)) - x_act(k, mv)
                    report.bracket_checks += 1
                    if lhs != rhs:
                        report.failures.append(f"[{m_name},{name}] on Q^{list(monomial)}")
            for a, b in itertools.combinations(range(len(aplus)), 2):
                x_name, y_name = aplus[a][0], aplus[b][0]
                bracket = _rplus_bracket(M, x_name, y_name)
                expected = apply(bracket, v, support=M.support)
                got = x_act(a, x_act(b, v)) - x_act(b, x_act(a, v))
                report.bracket_checks += 1
                if got != expected:
                    report.failures.append(f"[{x_name},{y_name}] on Q^{list(monomial)}")
            for k, (name, _) in enumerate(aplus):
                x = M.realization.get(name.replace("aplus", "rplus"))
                if x is None:
                    continue
                for y_name, y in rminus:
                    expected = M.act(commutator(x, y), v)
                    got = x_act(k, M.act(y, v)) - M.act(y, x_act(k, v))
                    report.bracket_checks += 1
                    report.rminus_checks += 1
                    if got != expected:
                        report.failures.append(f"[{name},{y_name}] on Q^{list(monomial)}")

    primitive = _primitive_vector(M)
    if primitive is not None:
        report.primitive_vector = list(primitive)
        cartan = [M.realization.h(i) for i in range(1, M.rank + 1)]
        report.cartan_profile = eigenvalues(M, cartan, ModuleVector.monomial(primitive))
    if report.failures:
        report.status = LiftStatus.FAILED
    logger.info(
        "g-lift checked",
        extra={
            "kind": M.kind.value,
            "n": M.rank,
            "ell": M.twist,
            "status": report.status.value,
            "bracket_checks": report.bracket_checks,
            "rminus_checks": report.rminus_checks,
        },
    )
    return report


def _rplus_bracket(M: WeightModule, x_name: str, y_name: str) -> WeylElement:
    """[x, y] from the Laurent realization; zero when it is not carried."""
    x = M.realization.get(x_name.replace("aplus", "rplus"))
    y = M.realization.get(y_name.replace("aplus", "rplus"))
    if x is None or y is None:
        return WeylElement.zero(M.rank)
    return commutator(x, y)


def _epsilon_coordinates(labels: List[Fraction]) -> List[Fraction]:
    """Σ c_i ϖ_i with ϖ_i = ε_1 + … + ε_i."""
    return [sum(labels[k:], Fraction(0)) for k in range(len(labels))]


def primitive_weight_labels(n: int, odd: bool) -> List[Fraction]:
    """Dynkin labels −½ϖ_n (even ℓ) or ϖ_{n−1} − 3/2ϖ_n (odd ℓ)."""
    labels = [Fraction(0)] * n
    if odd:
        labels[n - 2] = Fraction(1)
        labels[n - 1] = Fraction(-3, 2)
    else:
        labels[n - 1] = Fraction(-1, 2)
    return labels


def weyl_orbit_check(n: int) -> OrbitReport:
    """Do the two primitive weights lie in one dot-orbit of the C_n Weyl group?

    The group acts on ε-coordinates of λ + ρ by signed permutations.
    """
    rho = [Fraction(n - k) for k in range(n)]
    even = primitive_weight_labels(n, odd=False)
    odd = primitive_weight_labels(n, odd=True)
    even_shifted = [a + b for a, b in zip(_epsilon_coordinates(even), rho)]
    odd_shifted = [a + b for a, b in zip(_epsilon_coordinates(odd), rho)]
    orbit = set()
    for perm in itertools.permutations(even_shifted):
        for signs in itertools.product((1, -1), repeat=n):
            orbit.add(tuple(s * x for s, x in zip(signs, perm)))
    report = OrbitReport(
        rank=n,
        even_weight=even,
        odd_weight=odd,
        even_shifted=even_shifted,
        odd_shifted=odd_shifted,
        orbit_size=len(orbit),
        same_orbit=tuple(odd_shifted) in orbit,
    )
    logger.info("Weyl orbit checked", extra={"n": n, "same_orbit": report.same_orbit})
    return report


def _shift_last(v: ModuleVector, n: int, shift: int) -> ModuleVector:
    return ModuleVector({m[:n] + (m[n] + shift,): c for m, c in v.items()})


def regular_functions_iso(M: WeightModule) -> RegularFunctionsReport:
    """Check that 1 ↦ Q_{n+1}^{−ℓ/2} extends to an isomorphism onto ``M``.

    The source is H⁰ on the resolution at twist 0, the regular functions on
    the singular cone. Multiplication by Q_{n+1}^{−ℓ/2} moves weight λ to
    λ + ℓ/2; on every trusted weight of ``M`` it must carry the source basis
    onto the basis of ``M`` and commute with every table entry free of
    P_{n+1}.

    Raises:
        PreconditionError: Unless ``M`` is H⁰ on the resolution with even ℓ <= 0.
    """
    n, ell = M.rank, M.twist
    if M.kind != ModuleKind.H0_RESX or ell > 0 or ell % 2:
        raise PreconditionError(
            "Regular functions map onto H0 on the resolution at even ell <= 0, "
            f"got {M.kind.value} at {ell}"
        )
    shift = -ell // 2
    source = SupportPredicate(ModuleKind.H0_RESX, n, 0)
    report = RegularFunctionsReport(rank=n, twist=ell, shift=shift)
    operators = [
        (symbol, op)
        for symbol, op in sorted(M.realization.table.items())
        if all(t.nu[n] == 0 for t in op.iter_terms())
    ]

    for weight in M.weights:
        if not M.is_trusted(weight):
            continue
        report.weights.append(weight)
        source_basis = source.monomials_of_weight(weight + shift)
        images = sorted(m[:n] + (m[n] + shift,) for m in source_basis)
        report.basis_checks += 1
        if images != sorted(M.basis_at(weight)):
            report.failures.append(f"basis at weight {weight}")
        for monomial in source_basis:
            v = ModuleVector.monomial(monomial)
            image = _shift_last(v, n, shift)
            for symbol, op in operators:
                lhs = _shift_last(apply(op, v, support=source), n, shift)
                rhs = M.act(op, image)
                report.action_checks += 1
                if lhs != rhs:
                    report.failures.append(f"{symbol} on Q^{list(monomial)}")

    logger.info(
        "Regular functions isomorphism checked",
        extra={
            "n": n,
            "ell": ell,
            "basis_checks": report.basis_checks,
            "action_checks": report.action_checks,
            "passed": report.passed,
        },
    )
    return report
