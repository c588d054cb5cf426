"""Sparse exact arithmetic in the Weyl algebra on n+1 variables.

Q_1..Q_{n+1} are multiplication operators and P_1..P_{n+1} the matching
derivations, with [P_i, Q_j] = δ_ij. Elements are stored normal-ordered
(every Q left of every P) as a map (mu, nu) -> nonzero Fraction. Indices in the
public helpers are 1-based; tuples are 0-based.
"""

# stdlib
import itertools
import logging
import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

# first party
from src.errors import StructuralError
from src.models.module_vector import ModuleVector, MonomialPredicate
from src.utils import Rational, falling_factorial, format_fraction

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]
TermKey = Tuple[MultiIndex, MultiIndex]

_TERM_PATTERN = re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*Q\^\[([-\d,\s]*)\]\s*P\^\[([-\d,\s]*)\]\s*$"
)


def primed_sum(index: Sequence[int]) -> int:
    """Σ_{i=1..n} of a multi-index of length n+1."""
    return sum(index[:-1])


def _check_key(rank: int, mu: Sequence[int], nu: Sequence[int], laurent: bool) -> None:
    if len(mu) != rank + 1 or len(nu) != rank + 1:
        raise StructuralError(
            f"Multi-index length {len(mu)}/{len(nu)} does not match rank {rank}"
        )
    if any(x < 0 for x in nu):
        raise StructuralError(f"Negative P exponent in {tuple(nu)}")
    if any(x < 0 for x in mu[:-1]):
        raise StructuralError(
            f"Laurent exponent outside position {rank + 1}: {tuple(mu)}"
        )
    if mu[-1] < 0 and not laurent:
        raise StructuralError(
            f"Laurent exponent {mu[-1]} in position {rank + 1} without the Laurent flag"
        )


@dataclass(frozen=True)
class WeylTerm:
    coeff: Fraction
    mu: MultiIndex
    nu: MultiIndex

    @property
    def rank(self) -> int:
        return len(self.mu) - 1

    @property
    def tau(self) -> MultiIndex:
        return tuple(m - v for m, v in zip(self.mu, self.nu))

    def degree(self) -> int:
        return degree(self)

    def order(self) -> int:
        return sum(abs(m) for m in self.mu) + sum(self.nu)

    def element(self) -> "WeylElement":
        return WeylElement(
            self.rank, {(self.mu, self.nu): self.coeff}, laurent=self.mu[-1] < 0
        )


@dataclass(frozen=True)
class WeylElement:
    """Normal-ordered element of the (Laurent-in-Q_{n+1}) Weyl algebra.

    Attributes:
        rank: n; the algebra has n+1 variables.
        terms: (mu, nu) -> nonzero coefficient.
        laurent: Whether Q_{n+1} may carry negative exponents. Not part of
            equality: a Laurent computation that lands on a polynomial is equal
            to the polynomial.
    """

    rank: int
    terms: Dict[TermKey, Fraction] = field(default_factory=dict)
    laurent: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        cleaned: Dict[TermKey, Fraction] = {}
        for (mu, nu), coeff in self.terms.items():
            mu, nu = tuple(mu), tuple(nu)
            _check_key(self.rank, mu, nu, self.laurent)
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[(mu, nu)] = coeff
        object.__setattr__(self, "terms", cleaned)

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    # construction helpers

    @classmethod
    def zero(cls, rank: int) -> "WeylElement":
        return cls(rank, {})

    @classmethod
    def constant(cls, rank: int, value: Rational) -> "WeylElement":
        ones = (0,) * (rank + 1)
        return cls(rank, {(ones, ones): Fraction(value)})

    @classmethod
    def one(cls, rank: int) -> "WeylElement":
        return cls.constant(rank, 1)

    @classmethod
    def monomial(
        cls,
        rank: int,
        mu: Sequence[int],
        nu: Optional[Sequence[int]] = None,
        coeff: Rational = 1,
        laurent: bool = False,
    ) -> "WeylElement":
        nu = tuple(nu) if nu is not None else (0,) * (rank + 1)
        return cls(rank, {(tuple(mu), nu): Fraction(coeff)}, laurent=laurent)

    @classmethod
    def q(cls, rank: int, index: int, power: int = 1) -> "WeylElement":
        """Q_index^power (1-based); a negative power on Q_{n+1} is Laurent."""
        mu = [0] * (rank + 1)
        mu[index - 1] = power
        return cls.monomial(rank, mu, laurent=power < 0)

    @classmethod
    def p(cls, rank: int, index: int, power: int = 1) -> "WeylElement":
        nu = [0] * (rank + 1)
        nu[index - 1] = power
        return cls.monomial(rank, (0,) * (rank + 1), nu)

    # inspection

    def iter_terms(self) -> Iterator[WeylTerm]:
        for mu, nu in sorted(self.terms):
            yield WeylTerm(self.terms[(mu, nu)], mu, nu)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({degree(t) for t in self.iter_terms()})

    def order(self) -> int:
        return max((t.order() for t in self.iter_terms()), default=0)

    def has_laurent_terms(self) -> bool:
        return any(mu[-1] < 0 for mu, _ in self.terms)

    def coefficient(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        return self.terms.get((tuple(mu), tuple(nu)), Fraction(0))

    # arithmetic

    def _check_rank(self, other: "WeylElement") -> None:
        if self.rank != other.rank:
            raise StructuralError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: Union["WeylElement", Rational]) -> "WeylElement":
        if not isinstance(other, WeylElement):
            other = WeylElement.constant(self.rank, other)
        self._check_rank(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return WeylElement(self.rank, merged, laurent=self.laurent or other.laurent)

    def __radd__(self, other: Rational) -> "WeylElement":
        return self + other

    def __neg__(self) -> "WeylElement":
        return self.scale(-1)

    def __sub__(self, other: Union["WeylElement", Rational]) -> "WeylElement":
        if not isinstance(other, WeylElement):
            other = WeylElement.constant(self.rank, other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "WeylElement":
        return (-self) + other

    def scale(self, factor: Rational) -> "WeylElement":
        factor = Fraction(factor)
        return WeylElement(
            self.rank,
            {key: c * factor for key, c in self.terms.items()},
            laurent=self.laurent,
        )

    def __mul__(self, other: Union["WeylElement", Rational]) -> "WeylElement":
        if isinstance(other, WeylElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other: Rational) -> "WeylElement":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "WeylElement":
        result = WeylElement.one(self.rank)
        for _ in range(exponent):
            result = product(result, self)
        return result

    # serialization

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            f"{format_fraction(t.coeff)} * Q^[{','.join(map(str, t.mu))}] "
            f"P^[{','.join(map(str, t.nu))}]"
            for t in self.iter_terms()
        )

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str, rank: Optional[int] = None) -> "WeylElement":
        """Parse the output of ``to_text``.

        Raises:
            StructuralError: If the text is malformed, or is "0" without a rank.
        """
        text = text.strip()
        if text == "0":
            if rank is None:
                raise StructuralError("Rank is required to parse the zero element")
            return cls.zero(rank)
        terms: Dict[TermKey, Fraction] = {}
        for chunk in text.split(" + "):
            match = _TERM_PATTERN.match(chunk)
            if match is None:
                raise StructuralError(f"Malformed Weyl term: {chunk!r}")
            mu = tuple(int(x) for x in match.group(2).split(",") if x.strip())
            nu = tuple(int(x) for x in match.group(3).split(",") if x.strip())
            if rank is None:
                rank = len(mu) - 1
            terms[(mu, nu)] = terms.get((mu, nu), Fraction(0)) + Fraction(match.group(1))
        laurent = any(mu[-1] < 0 for mu, _ in terms)
        return cls(rank, terms, laurent=laurent)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "laurent": self.has_laurent_terms(),
            "terms": [
                {"coeff": format_fraction(t.coeff), "mu": list(t.mu), "nu": list(t.nu)}
                for t in self.iter_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeylElement":
        terms = {
            (tuple(t["mu"]), tuple(t["nu"])): Fraction(t["coeff"]) for t in data["terms"]
        }
        return cls(int(data["rank"]), terms, laurent=bool(data.get("laurent", False)))


def _contract(b: int, c: int) -> List[Tuple[int, int]]:
    """Options (k, coefficient) for moving P^b past Q^c in one variable.

    P^b Q^c = Σ_k binom(b,k) · c(c-1)…(c-k+1) · Q^{c-k} P^{b-k}, valid for any
    integer c.
    """
    options = []
    for k in range(b + 1):
        coeff = math.comb(b, k) * falling_factorial(c, k)
        if coeff == 0:
            break
        options.append((k, coeff))
    return options


def _term_product(
    left: TermKey, right: TermKey
) -> Iterator[Tuple[TermKey, int]]:
    (mu1, nu1), (mu2, nu2) = left, right
    per_variable = [_contract(b, c) for b, c in zip(nu1, mu2)]
    for choice in itertools.product(*per_variable):
        coeff = 1
        mu, nu = [], []
        for i, (k, c) in enumerate(choice):
            coeff *= c
            mu.append(mu1[i] + mu2[i] - k)
            nu.append(nu1[i] + nu2[i] - k)
        yield (tuple(mu), tuple(nu)), coeff


def product(a: WeylElement, b: WeylElement) -> WeylElement:
    """Normal-ordered product a·b.

    Raises:
        StructuralError: If the ranks differ.
    """
    if a.rank != b.rank:
        raise StructuralError(f"Rank mismatch: {a.rank} vs {b.rank}")
    acc: Dict[TermKey, Fraction] = {}
    for key_a, coeff_a in a.terms.items():
        for key_b, coeff_b in b.terms.items():
            for key, c in _term_product(key_a, key_b):
                acc[key] = acc.get(key, Fraction(0)) + coeff_a * coeff_b * c
    return WeylElement(a.rank, acc, laurent=a.laurent or b.laurent)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return product(a, b) - product(b, a)


def ad_power(x: WeylElement, y: WeylElement, times: int) -> WeylElement:
    """ad(x)^times (y)."""
    result = y
    for _ in range(times):
        result = commutator(x, result)
    return result


def degree(t: WeylTerm) -> int:
    return sum(t.mu) - sum(t.nu)


def apply(
    op: WeylElement,
    v: ModuleVector,
    support: Optional[MonomialPredicate] = None,
) -> ModuleVector:
    """Act with a normal-ordered operator on a combination of Laurent monomials.

    P_i sends Q_i^k to k·Q_i^{k-1} for every integer k, Q_i multiplies. A
    resulting monomial outside ``support`` represents a coboundary and is
    dropped. With ``support=None`` nothing is dropped.
    """
    acc: Dict[Tuple[int, ...], Fraction] = {}
    for (mu, nu), c in op.terms.items():
        for m, d in v.terms.items():
            if len(m) != len(mu):
                raise StructuralError(
                    f"Monomial {m} does not match operator rank {op.rank}"
                )
            coeff = c * d
            for exp, k in zip(m, nu):
                if k:
                    coeff *= falling_factorial(exp, k)
                    if coeff == 0:
                        break
            if coeff == 0:
                continue
            target = tuple(e - k + s for e, k, s in zip(m, nu, mu))
            if support is not None and not support.contains(target):
                continue
            acc[target] = acc.get(target, Fraction(0)) + coeff
    return ModuleVector(acc)


def random_element(
    rank: int,
    rng: random.Random,
    max_order: int = 3,
    n_terms: int = 3,
) -> WeylElement:
    """Random polynomial element with small rational coefficients."""
    slots = 2 * (rank + 1)
    terms: Dict[TermKey, Fraction] = {}
    for _ in range(n_terms):
        exps = [0] * slots
        for _ in range(rng.randint(0, max_order)):
            exps[rng.randrange(slots)] += 1
        numerator = rng.choice([-3, -2, -1, 1, 2, 3])
        key = (tuple(exps[: rank + 1]), tuple(exps[rank + 1 :]))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(numerator, rng.randint(1, 3))
    return WeylElement(rank, terms)


def linear_combination(
    rank: int, pairs: Iterable[Tuple[Rational, WeylElement]]
) -> WeylElement:
    result = WeylElement.zero(rank)
    for coeff, element in pairs:
        result = result + element.scale(coeff)
    return result


def ratio(a: WeylElement, b: WeylElement) -> Optional[Fraction]:
    """Return c with a == c·b, or None; None also when b is zero."""
    if b.is_zero():
        return None
    if a.is_zero():
        return Fraction(0)
    if set(a.terms) != set(b.terms):
        return None
    key = min(b.terms)
    c = a.terms[key] / b.terms[key]
    return c if all(a.terms[k] == c * b.terms[k] for k in b.terms) else None
