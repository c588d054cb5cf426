# stdlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Protocol,
    Tuple,
    runtime_checkable,
)

# first party
from src.utils import Rational, format_fraction

Monomial = Tuple[int, ...]


@runtime_checkable
class MonomialPredicate(Protocol):
    """Anything that can decide whether a Laurent monomial survives truncation."""

    def contains(self, monomial: Monomial) -> bool: ...


@dataclass(frozen=True)
class ModuleVector:
    """Sparse exact combination of Laurent monomials Q^m.

    Zero coefficients are never stored, so dataclass equality is equality of
    vectors.
    """

    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            tuple(m): Fraction(c) for m, c in self.terms.items() if Fraction(c) != 0
        }
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: Rational = 1) -> "ModuleVector":
        return cls({tuple(exponents): Fraction(coeff)})

    @classmethod
    def zero(cls) -> "ModuleVector":
        return cls({})

    @classmethod
    def from_coordinates(
        cls, basis: List[Monomial], coords: Iterable[Rational]
    ) -> "ModuleVector":
        return cls({m: Fraction(c) for m, c in zip(basis, coords)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(tuple(monomial), Fraction(0))

    def support(self) -> List[Monomial]:
        return sorted(self.terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        for m in sorted(self.terms):
            yield m, self.terms[m]

    def coordinates(self, basis: List[Monomial]) -> List[Fraction]:
        return [self.coefficient(m) for m in basis]

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        merged = dict(self.terms)
        for m, c in other.terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return ModuleVector(merged)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scale(self, factor: Rational) -> "ModuleVector":
        factor = Fraction(factor)
        return ModuleVector({m: c * factor for m, c in self.terms.items()})

    def __rmul__(self, factor: Rational) -> "ModuleVector":
        return self.scale(factor)

    def proportional_to(self, other: "ModuleVector") -> Optional[Fraction]:
        """Return c with self == c * other, or None (also None if other is zero)."""
        if other.is_zero():
            return None
        if self.is_zero():
            return Fraction(0)
        if set(self.terms) != set(other.terms):
            return None
        first = min(other.terms)
        ratio = self.terms[first] / other.terms[first]
        if all(self.terms[m] == ratio * other.terms[m] for m in other.terms):
            return ratio
        return None

    def to_dict(self) -> Dict[str, object]:
        return {
            "terms": [
                {"coeff": format_fraction(c), "exponents": list(m)}
                for m, c in self.items()
            ]
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            f"{format_fraction(c)} * Q^[{','.join(map(str, m))}]" for m, c in self.items()
        )
