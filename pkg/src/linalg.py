"""Exact rational linear algebra on dense row lists.

Vectors are plain lists of ``Fraction``. Row reduction is delegated to sympy's
``DomainMatrix`` over ``QQ``; pivoting is deterministic (leftmost column,
topmost row), so certificates are reproducible.
"""

# stdlib
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

# third party
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Vector = List[Fraction]


def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    rep = [[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
    return DomainMatrix(rep, (len(rep), ncols), QQ)


def _from_domain(matrix: DomainMatrix) -> List[Vector]:
    dense = matrix.to_Matrix()
    nrows, ncols = dense.shape
    return [
        [Fraction(int(dense[i, j].p), int(dense[i, j].q)) for j in range(ncols)]
        for i in range(nrows)
    ]


def _as_fractions(rows: Sequence[Sequence[object]]) -> List[Vector]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[object]], ncols: int) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form.

    Args:
        rows: The matrix as a list of equal-length rows.
        ncols: Number of columns (needed when ``rows`` is empty).

    Returns:
        The nonzero rows of the reduced matrix and the list of pivot columns.
    """
    rows = _as_fractions(rows)
    if not rows or ncols == 0:
        return [], []
    reduced, pivots = _to_domain(rows, ncols).rref()
    dense = _from_domain(reduced)
    pivots = list(pivots)
    return dense[: len(pivots)], pivots


def rank(rows: Sequence[Sequence[object]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def row_basis(rows: Sequence[Sequence[object]], ncols: int) -> List[Vector]:
    return rref(rows, ncols)[0]


def nullspace(rows: Sequence[Sequence[object]], ncols: int) -> List[Vector]:
    """Basis of {x : rows · x = 0}, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vec[pivot] = -row[free]
        basis.append(vec)
    return basis


def solve_combination(
    target: Sequence[object], vectors: Sequence[Sequence[object]]
) -> Optional[Vector]:
    """Find c with sum(c_k * vectors[k]) == target.

    Returns:
        The coefficients (free variables set to 0), or None when the target is
        outside the span.
    """
    dim = len(target)
    k = len(vectors)
    if k == 0:
        return [] if all(Fraction(x) == 0 for x in target) else None
    augmented = [[vectors[j][i] for j in range(k)] + [target[i]] for i in range(dim)]
    reduced, pivots = rref(augmented, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, pivot in zip(reduced, pivots):
        coeffs[pivot] = row[k]
    return coeffs


def express_unit_vectors(
    rows: Sequence[Sequence[object]], ncols: int
) -> Dict[int, Vector]:
    """For each column whose unit vector lies in the row space, its combination.

    Row-reduces ``[rows | I]``; a column ``c`` is in the span exactly when the
    reduced row pivoting at ``c`` equals the unit vector ``e_c`` on the left
    block, and the right block of that row is the certificate.
    """
    nrows = len(rows)
    if nrows == 0:
        return {}
    augmented = [
        list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(nrows)]
        for i, row in enumerate(rows)
    ]
    reduced, pivots = rref(augmented, ncols + nrows)
    found: Dict[int, Vector] = {}
    for row, pivot in zip(reduced, pivots):
        if pivot >= ncols:
            break
        left = row[:ncols]
        if all(x == 0 for j, x in enumerate(left) if j != pivot):
            found[pivot] = row[ncols:]
    logger.debug(
        "Expressed unit vectors", extra={"rows": nrows, "spanned": len(found)}
    )
    return found
