# stdlib
import enum
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

# first party
from src.errors import PreconditionError, StructuralError
from src.models.weyl import MultiIndex, WeylElement

logger = logging.getLogger(__name__)


class RingKind(str, enum.Enum):
    SINGULAR_X = "SingularX"
    RESOLUTION_X = "ResolutionX"
    WEIGHTED_Y = "WeightedY"


@dataclass(frozen=True)
class RingSpec:
    """One of the three rings of differential operators, given extensionally.

    Attributes:
        kind: Which ring.
        rank: n (operators live in the Weyl algebra on n+1 variables).
        twist: ℓ; ignored for SingularX, must be even for WeightedY.
    """

    kind: RingKind
    rank: int
    twist: int = 0

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise StructuralError(f"Rank must be positive, got {self.rank}")
        if self.kind == RingKind.WEIGHTED_Y and self.twist % 2:
            raise PreconditionError(
                f"WeightedY needs an even twist (O({self.twist}) is not invertible)"
            )

    @property
    def laurent_last(self) -> bool:
        return self.kind == RingKind.SINGULAR_X

    @property
    def last_weight(self) -> int:
        """Coefficient of τ_{n+1} in the homogeneity functional."""
        return 2 if self.kind == RingKind.WEIGHTED_Y else -2

    def homogeneity(self, tau: MultiIndex) -> int:
        return sum(tau[:-1]) + self.last_weight * tau[-1]

    def label(self) -> str:
        if self.kind == RingKind.SINGULAR_X:
            return f"{self.kind.value}(n={self.rank})"
        return f"{self.kind.value}(n={self.rank}, ell={self.twist})"


@dataclass(frozen=True)
class Generator:
    label: str
    element: WeylElement
    degree: int

    def to_dict(self) -> Dict[str, object]:
        return {"label": self.label, "degree": self.degree, "element": self.element.to_text()}


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a ring grouped by class, plus its Euler relation.

    degree_plus / degree_minus hold the images of the resolution's +3 / −3
    classes; for WeightedY their actual degrees differ (see ``degree`` on
    each generator).
    """

    spec: RingSpec
    degree0: Tuple[Generator, ...]
    degree_plus: Tuple[Generator, ...]
    degree_minus: Tuple[Generator, ...]
    euler_relation: WeylElement
    signs: Dict[str, int] = field(default_factory=dict)

    def all(self) -> List[Generator]:
        return list(self.degree0) + list(self.degree_plus) + list(self.degree_minus)

    def counts(self) -> Tuple[int, int, int]:
        return len(self.degree0), len(self.degree_plus), len(self.degree_minus)

    def degree_labels(self) -> Tuple[List[int], List[int], List[int]]:
        return (
            sorted({g.degree for g in self.degree0}),
            sorted({g.degree for g in self.degree_plus}),
            sorted({g.degree for g in self.degree_minus}),
        )
