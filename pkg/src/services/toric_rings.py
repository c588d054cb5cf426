# stdlib
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

# first party
from src import linalg
from src.errors import StructuralError
from src.models.reports import MonomialSpan, SpanReport
from src.models.ring_spec import Generator, GeneratorSet, RingKind, RingSpec
from src.models.weyl import TermKey, WeylElement, WeylTerm, degree, product
from src.utils import compositions, format_fraction

logger = logging.getLogger(__name__)


def is_member(t: Union[WeylTerm, WeylElement], r: RingSpec) -> bool:
    """Whether a term (or every term of an element) lies in the ring.

    Raises:
        StructuralError: If the ranks differ.
    """
    if isinstance(t, WeylElement):
        if t.rank != r.rank:
            raise StructuralError(f"Rank mismatch: element {t.rank}, ring {r.rank}")
        return all(is_member(term, r) for term in t.iter_terms())
    if t.rank != r.rank:
        raise StructuralError(f"Rank mismatch: term {t.rank}, ring {r.rank}")
    if any(x < 0 for x in t.nu) or any(x < 0 for x in t.mu[:-1]):
        return False
    if t.mu[-1] < 0 and not r.laurent_last:
        return False
    return r.homogeneity(t.tau) == 0


def _monomial(
    n: int, qs: Sequence[int] = (), ps: Sequence[int] = (), last_q: int = 0
) -> WeylElement:
    mu = [0] * (n + 1)
    nu = [0] * (n + 1)
    for i in qs:
        mu[i - 1] += 1
    for j in ps:
        nu[j - 1] += 1
    mu[n] += last_q
    return WeylElement.monomial(n, mu, nu, laurent=mu[n] < 0)


def _generator(label: str, element: WeylElement) -> Generator:
    leading = max(element.iter_terms(), key=lambda t: (t.order(), t.mu, t.nu))
    return Generator(label=label, element=element, degree=degree(leading))


def euler_relation(r: RingSpec) -> WeylElement:
    """ΣQ_iP_i ∓ 2Q_{n+1}P_{n+1} − ℓ (no ℓ for SingularX)."""
    n = r.rank
    result = WeylElement.zero(n)
    for i in range(1, n + 1):
        result = result + _monomial(n, qs=[i], ps=[i])
    result = result + _monomial(n, qs=[n + 1], ps=[n + 1]).scale(r.last_weight)
    if r.kind != RingKind.SINGULAR_X:
        result = result - r.twist
    return result


def generators(r: RingSpec) -> GeneratorSet:
    """Generator lists of the three rings.

    WeightedY(ℓ) gets the F_I images of the ResolutionX(ℓ+2) generators; the
    sign of each image's leading coefficient is kept in ``signs``.
    """
    n = r.rank
    if r.kind == RingKind.WEIGHTED_Y:
        return _weighted_generators(r)

    degree0 = [
        _generator(f"Q{i}P{j}", _monomial(n, qs=[i], ps=[j]))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    degree0.append(_generator(f"Q{n + 1}P{n + 1}", _monomial(n, qs=[n + 1], ps=[n + 1])))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    plus = [
        _generator(f"Q{i}Q{j}Q{n + 1}", _monomial(n, qs=[i, j, n + 1])) for i, j in pairs
    ]
    if r.kind == RingKind.SINGULAR_X:
        minus = [
            _generator(f"P{i}P{j}Q{n + 1}^-1", _monomial(n, ps=[i, j], last_q=-1))
            for i, j in pairs
        ]
    else:
        minus = [
            _generator(f"P{i}P{j}P{n + 1}", _monomial(n, ps=[i, j, n + 1]))
            for i, j in pairs
        ]
    return GeneratorSet(
        spec=r,
        degree0=tuple(degree0),
        degree_plus=tuple(plus),
        degree_minus=tuple(minus),
        euler_relation=euler_relation(r),
    )


def _weighted_generators(r: RingSpec) -> GeneratorSet:
    # deferred: fourier builds on this module
    from src.services.fourier import ReflectionSpec, fourier_I

    source = generators(RingSpec(RingKind.RESOLUTION_X, r.rank, r.twist + 2))
    spec = ReflectionSpec(rank=r.rank)
    signs: Dict[str, int] = {}

    def transport(group: Sequence[Generator]) -> Tuple[Generator, ...]:
        images = []
        for g in group:
            image = fourier_I(g.element, spec)
            leading = max(image.iter_terms(), key=lambda t: (t.order(), t.mu, t.nu))
            signs[g.label] = 1 if leading.coeff > 0 else -1
            images.append(Generator(f"F({g.label})", image, degree(leading)))
        return tuple(images)

    return GeneratorSet(
        spec=r,
        degree0=transport(source.degree0),
        degree_plus=transport(source.degree_plus),
        degree_minus=transport(source.degree_minus),
        euler_relation=euler_relation(r),
        signs=signs,
    )


def admissible_monomials(r: RingSpec, max_order: int) -> List[TermKey]:
    """All member monomials Q^mu P^nu with Σ|mu| + Σnu ≤ max_order.

    Sorted by (order, mu, nu).
    """
    n = r.rank
    slots = 2 * (n + 1)
    found = set()
    for total in range(max_order + 1):
        for exps in compositions(total, slots):
            mu, nu = tuple(exps[: n + 1]), tuple(exps[n + 1 :])
            found.add((mu, nu))
            if r.laurent_last and mu[n] > 0:
                found.add((mu[:n] + (-mu[n],), nu))
    members = [
        (mu, nu)
        for mu, nu in found
        if is_member(WeylTerm(Fraction(1), mu, nu), r)
    ]
    return sorted(members, key=lambda key: (_order(key), key))


def _order(key: TermKey) -> int:
    mu, nu = key
    return sum(abs(x) for x in mu) + sum(nu)


def _render(key: TermKey) -> str:
    mu, nu = key
    return f"Q^[{','.join(map(str, mu))}] P^[{','.join(map(str, nu))}]"


def _enumerate_words(
    gens: GeneratorSet, max_order: int, max_word_len: int
) -> List[Tuple[Tuple[str, ...], WeylElement]]:
    """Products of at most max_word_len generators whose terms stay within max_order.

    Right-extending a word never lowers its order, so pruning on the product
    order is exact.
    """
    n = gens.spec.rank
    one = WeylElement.one(n)
    words = [((), one)]
    frontier = [((), one)]
    for _ in range(max_word_len):
        nxt = []
        for word, element in frontier:
            for g in gens.all():
                prod = product(element, g.element)
                if prod.is_zero() or prod.order() > max_order:
                    continue
                nxt.append((word + (g.label,), prod))
        words.extend(nxt)
        frontier = nxt
    return words


def _spanned(
    words: List[Tuple[Tuple[str, ...], WeylElement]],
    targets: List[TermKey],
) -> Dict[TermKey, List[Tuple[str, Fraction]]]:
    columns = sorted({key for _, w in words for key in w.terms} | set(targets))
    index = {key: i for i, key in enumerate(columns)}
    rows = []
    for _, w in words:
        row = [Fraction(0)] * len(columns)
        for key, c in w.terms.items():
            row[index[key]] = c
        rows.append(row)
    unit = linalg.express_unit_vectors(rows, len(columns))
    result = {}
    for key in targets:
        combo = unit.get(index[key])
        if combo is None:
            continue
        result[key] = [
            ("*".join(words[k][0]) or "1", c) for k, c in enumerate(combo) if c != 0
        ]
    return result


def span_oracle(r: RingSpec, max_order: int, max_word_len: int) -> SpanReport:
    """Check that admissible monomials are spanned by short generator words.

    Args:
        r: The ring.
        max_order: Bound on Σ|mu| + Σnu for monomials and word products.
        max_word_len: Longest word considered.

    Returns:
        Per-monomial verdicts with certificates for (max_order, max_word_len),
        and the minimal word length that suffices for each order.
    """
    gens = generators(r)
    targets = admissible_monomials(r, max_order)
    all_words = _enumerate_words(gens, max_order, max_word_len)
    report = SpanReport(
        ring=r.label(),
        rank=r.rank,
        twist=None if r.kind == RingKind.SINGULAR_X else r.twist,
        max_order=max_order,
        max_word_len=max_word_len,
        word_count=len(all_words),
    )

    for order in range(max_order + 1):
        order_targets = [t for t in targets if _order(t) <= order]
        minimal: Optional[int] = None
        for length in range(max_word_len + 1):
            words = [
                (w, e) for w, e in all_words if len(w) <= length and e.order() <= order
            ]
            if len(_spanned(words, order_targets)) == len(order_targets):
                minimal = length
                break
        report.minimal_word_length[order] = minimal

    certificates = _spanned(all_words, targets)
    for key in targets:
        combo = certificates.get(key)
        report.entries.append(
            MonomialSpan(
                monomial=_render(key),
                order=_order(key),
                spanned=combo is not None,
                certificate=[
                    {"word": word, "coeff": format_fraction(c)} for word, c in combo or []
                ],
            )
        )
    logger.info(
        "Span oracle finished",
        extra={
            "ring": report.ring,
            "max_order": max_order,
            "monomials": len(targets),
            "words": len(all_words),
            "all_spanned": report.all_spanned,
        },
    )
    return report
