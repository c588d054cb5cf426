# stdlib
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

# first party
from src import linalg
from src.errors import StructuralError
from src.models.realization import CartanData, Realization, index_pairs
from src.models.reports import RelationReport
from src.models.weyl import WeylElement, ad_power, commutator, product, ratio

logger = logging.getLogger(__name__)

Labeled = Tuple[str, WeylElement]


def _qp(n: int, q: Sequence[int], p: Sequence[int], coeff: object = 1) -> WeylElement:
    """coeff · Π Q_i · Π P_j (1-based, repeats allowed, Q_{n+1}^-1 as index -(n+1))."""
    mu = [0] * (n + 1)
    nu = [0] * (n + 1)
    for i in q:
        if i < 0:
            mu[-i - 1] -= 1
        else:
            mu[i - 1] += 1
    for j in p:
        nu[j - 1] += 1
    return WeylElement.monomial(n, mu, nu, coeff=Fraction(coeff), laurent=mu[n] < 0)


def build_realization(n: int, ell: int) -> Realization:
    """Chevalley–Cartan generators of sp_2n and the parabolic pieces as operators.

    Args:
        n: Rank, at least 2.
        ell: Twist ℓ; it only enters through the weight grading, the table
            itself is the same for every ℓ.

    Raises:
        StructuralError: If n < 2.
    """
    if n < 2:
        raise StructuralError(f"sp_2n realization needs n >= 2, got {n}")
    half = Fraction(1, 2)
    last = n + 1
    table: Dict[str, WeylElement] = {}

    for i in range(1, n):
        table[f"e_{i}"] = _qp(n, [i + 1], [i], -1)
        table[f"f_{i}"] = _qp(n, [i], [i + 1], -1)
        table[f"h_{i}"] = _qp(n, [i], [i], -1) + _qp(n, [i + 1], [i + 1])
    table[f"e_{n}"] = _qp(n, [-last], [n, n], half)
    table[f"f_{n}"] = _qp(n, [n, n, last], [], -half)
    table[f"h_{n}"] = _qp(n, [n], [n], -1) - half

    euler = WeylElement.zero(n)
    for i in range(1, n + 1):
        euler = euler + _qp(n, [i], [i])
    table["z"] = euler.scale(-half) - Fraction(n, 4)
    table["z_ell"] = _qp(n, [last], [last], -1)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            shift = half if i == j else 0
            table[f"m_{i}_{j}"] = _qp(n, [j], [i], -1) - shift

    for i, j in index_pairs(n):
        rplus = _qp(n, [-last], [i, j], -1)
        table[f"rplus_{i}_{j}"] = rplus
        table[f"rminus_{i}_{j}"] = _qp(n, [i, j, last], [])
        table[f"aplus_{i}_{j}"] = product(rplus, table["z_ell"])

    logger.debug("Built realization", extra={"n": n, "ell": ell, "symbols": len(table)})
    return Realization(rank=n, twist=ell, table=table, rplus_sign=-1)


def decompose(element: WeylElement, basis: Sequence[WeylElement]) -> Optional[List[Fraction]]:
    """Coefficients expressing ``element`` in ``basis`` exactly, or None."""
    keys = sorted({k for b in basis for k in b.terms} | set(element.terms))
    vectors = [[b.coefficient(*k) for k in keys] for b in basis]
    target = [element.coefficient(*k) for k in keys]
    return linalg.solve_combination(target, vectors)


def verify_sp2n(r: Realization) -> RelationReport:
    """Check the Chevalley–Serre presentation of sp_2n inside the realization.

    The Cartan integers are read off from [h_i, e_j] and compared with the
    Bourbaki C_n matrix; every check that fails is kept with its operands.
    """
    n = r.rank
    report = RelationReport(name="sp2n", rank=n, twist=r.twist)
    zero = WeylElement.zero(n)
    indices = range(1, n + 1)

    for i in indices:
        for j in indices:
            lhs = commutator(r.h(i), r.h(j))
            report.add(f"[h_{i},h_{j}] = 0", lhs, zero, lhs == zero)

    for i in indices:
        for j in indices:
            lhs = commutator(r.e(i), r.f(j))
            rhs = r.h(i) if i == j else zero
            report.add(f"[e_{i},f_{j}] = {'h_' + str(i) if i == j else '0'}", lhs, rhs, lhs == rhs)

    matrix: List[List[Optional[int]]] = []
    for i in indices:
        row: List[Optional[int]] = []
        for j in indices:
            bracket = commutator(r.h(i), r.e(j))
            a = ratio(bracket, r.e(j))
            ok = a is not None and a.denominator == 1
            report.add(f"[h_{i},e_{j}] = a_{i}{j} e_{j}", bracket, r.e(j), ok)
            value = int(a) if ok else None
            row.append(value)
            if value is not None:
                lhs = commutator(r.h(i), r.f(j))
                rhs = r.f(j).scale(-value)
                report.add(f"[h_{i},f_{j}] = -a_{i}{j} f_{j}", lhs, rhs, lhs == rhs)
        matrix.append(row)
    report.cartan_matrix = matrix  # type: ignore[assignment]
    report.expected_cartan_matrix = CartanData.bourbaki_c(n).as_lists()

    for i in indices:
        for j in indices:
            a = matrix[i - 1][j - 1]
            if i == j or a is None or a > 0:
                continue
            for name, x, y in (("e", r.e(i), r.e(j)), ("f", r.f(i), r.f(j))):
                lhs = ad_power(x, y, 1 - a)
                report.add(
                    f"ad({name}_{i})^{1 - a}({name}_{j}) = 0", lhs, zero, lhs == zero
                )

    logger.info(
        "sp2n relations checked",
        extra={"n": n, "checks": len(report.checks), "failures": len(report.failures)},
    )
    return report


def verify_parabolic(r: Realization) -> RelationReport:
    """Brackets of the parabolic decomposition and of 𝔯₊z_ℓ.

    Checks involving symbols the realization does not carry (a transported
    table has no Laurent rplus) are skipped and listed.
    """
    n = r.rank
    report = RelationReport(name="parabolic", rank=n, twist=r.twist)
    zero = WeylElement.zero(n)
    aplus = r.aplus_basis()
    rminus = r.rminus_basis()
    rplus = r.rplus_basis()

    for name, x in aplus:
        lhs = commutator(r.z_ell, x)
        report.add(f"[z_ell,{name}] = {name}", lhs, x, lhs == x)

    for a_idx, (name_a, x) in enumerate(aplus):
        for name_b, y in aplus[a_idx:]:
            lhs = commutator(x, y)
            report.add(f"[{name_a},{name_b}] = 0", lhs, zero, lhs == zero)

    if rplus:
        for name, x in rplus:
            lhs = commutator(r.z, x)
            report.add(f"[z,{name}] = {name}", lhs, x, lhs == x)
    else:
        report.skipped.append("[z,rplus] = rplus")
    for name, y in rminus:
        lhs = commutator(r.z, y)
        report.add(f"[z,{name}] = -{name}", lhs, -y, lhs == -y)

    aplus_elements = [x for _, x in aplus]
    rminus_elements = [y for _, y in rminus]
    for m_name, m in r.m_basis():
        lhs = commutator(r.z_ell, m)
        report.add(f"[z_ell,{m_name}] = 0", lhs, zero, lhs == zero)
        for name, x in aplus:
            bracket = commutator(m, x)
            coeffs = decompose(bracket, aplus_elements)
            report.add(
                f"[{m_name},{name}] in span(aplus)", bracket, "span(aplus)", coeffs is not None
            )
        for name, y in rminus:
            bracket = commutator(m, y)
            coeffs = decompose(bracket, rminus_elements)
            report.add(
                f"[{m_name},{name}] in span(rminus)", bracket, "span(rminus)", coeffs is not None
            )

    logger.info(
        "Parabolic relations checked",
        extra={
            "n": n,
            "ell": r.twist,
            "transported": r.transported,
            "checks": len(report.checks),
            "failures": len(report.failures),
        },
    )
    return report


def a_ell_generating_set(r: Realization) -> List[Labeled]:
    """1, the gl_n images, z_ell, rminus and aplus, in that order."""
    n = r.rank
    generating: List[Labeled] = [("1", WeylElement.one(n))]
    generating.extend(r.m_basis())
    generating.append(("z_ell", r.z_ell))
    generating.extend(r.rminus_basis())
    generating.extend(r.aplus_basis())
    return generating
