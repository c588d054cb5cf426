# stdlib
import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

# first party
from src.errors import ModuleError, PreconditionError, StructuralError
from src.models.module_vector import Monomial, ModuleVector
from src.models.realization import Realization
from src.models.weyl import WeylElement, apply
from src.utils import compositions, negative_compositions

logger = logging.getLogger(__name__)


class ModuleKind(str, enum.Enum):
    H0_RESX = "H0_ResX"
    HTOP_RESX = "Htop_ResX"
    H0_Y = "H0_Y"
    HTOP_Y = "Htop_Y"

    @property
    def on_resolution(self) -> bool:
        return self in (ModuleKind.H0_RESX, ModuleKind.HTOP_RESX)

    @property
    def top_degree(self) -> bool:
        return self in (ModuleKind.HTOP_RESX, ModuleKind.HTOP_Y)

    @property
    def finite(self) -> bool:
        return self != ModuleKind.H0_RESX


@dataclass(frozen=True)
class SupportPredicate:
    """Which Laurent monomials Q^μ span the cohomology module.

    Monomials outside the region are Čech coboundaries; ``apply`` drops them.
    """

    kind: ModuleKind
    rank: int
    twist: int

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise StructuralError(f"Modules need n >= 2, got {self.rank}")
        if not self.kind.on_resolution and self.twist % 2:
            raise PreconditionError(
                f"{self.kind.value} needs an even twist, got {self.twist}"
            )

    @property
    def last_weight(self) -> int:
        return -2 if self.kind.on_resolution else 2

    def contains(self, monomial: Monomial) -> bool:
        n = self.rank
        if len(monomial) != n + 1:
            return False
        primed, last = monomial[:n], monomial[n]
        if sum(primed) + self.last_weight * last != self.twist:
            return False
        if self.kind in (ModuleKind.H0_RESX, ModuleKind.H0_Y):
            return all(x >= 0 for x in monomial)
        if self.kind == ModuleKind.HTOP_RESX:
            return all(x < 0 for x in primed) and last >= 0
        return all(x < 0 for x in monomial)

    def weight_of(self, monomial: Monomial) -> int:
        """z_ℓ-eigenvalue: −μ_{n+1} on the resolution, μ_{n+1}+1 on Y."""
        last = monomial[self.rank]
        return -last if self.kind.on_resolution else last + 1

    def last_exponent(self, weight: int) -> int:
        return -weight if self.kind.on_resolution else weight - 1

    def monomials_of_weight(self, weight: int) -> List[Monomial]:
        """Basis of M^λ, in descending lexicographic order."""
        n = self.rank
        last = self.last_exponent(weight)
        if not self.kind.top_degree and last < 0:
            return []
        if self.kind == ModuleKind.HTOP_Y and last >= 0:
            return []
        if self.kind == ModuleKind.HTOP_RESX and last < 0:
            return []
        total = self.twist - self.last_weight * last
        if self.kind.top_degree:
            primed = negative_compositions(total, n)
        else:
            primed = compositions(total, n)
        return [tuple(p) + (last,) for p in primed]


@dataclass
class WeightModule:
    """A z_ℓ-graded monomial module with the operators acting on it.

    Attributes:
        support: The monomial region.
        realization: Action table; the transported one for Y-modules.
        window: Inclusive (low, high) weight range that was enumerated.
        spaces: Basis of each nonempty weight space inside the window.
        untrusted: Window-boundary weights whose neighbour outside the
            window is nonempty.
    """

    support: SupportPredicate
    realization: Realization
    window: Tuple[int, int]
    spaces: Dict[int, Tuple[Monomial, ...]] = field(default_factory=dict)
    untrusted: Tuple[int, ...] = ()

    @property
    def kind(self) -> ModuleKind:
        return self.support.kind

    @property
    def rank(self) -> int:
        return self.support.rank

    @property
    def twist(self) -> int:
        return self.support.twist

    @property
    def weights(self) -> List[int]:
        """Nonempty weights in the window, highest first."""
        return sorted(self.spaces, reverse=True)

    @property
    def top_weight(self) -> Optional[int]:
        return max(self.spaces) if self.spaces else None

    def is_empty(self) -> bool:
        return not self.spaces

    def is_trusted(self, weight: int) -> bool:
        return weight not in self.untrusted

    def dimension(self, weight: int) -> int:
        return len(self.spaces.get(weight, ()))

    def basis_at(self, weight: int) -> Tuple[Monomial, ...]:
        """Basis of M^λ; weights outside the window are enumerated on demand."""
        if weight in self.spaces:
            return self.spaces[weight]
        lo, hi = self.window
        if lo <= weight <= hi:
            return ()
        return tuple(self.support.monomials_of_weight(weight))

    def monomials(self) -> List[Monomial]:
        return [m for w in self.weights for m in self.spaces[w]]

    def contains(self, monomial: Monomial) -> bool:
        lo, hi = self.window
        return self.support.contains(monomial) and lo <= self.support.weight_of(monomial) <= hi

    def weight_of(self, monomial: Monomial) -> int:
        return self.support.weight_of(monomial)

    def act(self, op: WeylElement, v: ModuleVector) -> ModuleVector:
        return apply(op, v, support=self.support)

    def weight_shift(self, op: WeylElement) -> int:
        """How far ``op`` moves weights, read from its Q_{n+1}/P_{n+1} degree.

        Raises:
            ModuleError: If the terms of ``op`` shift by different amounts.
        """
        n = self.rank
        shifts = {t.mu[n] - t.nu[n] for t in op.iter_terms()}
        if len(shifts) > 1:
            raise ModuleError(f"Operator is not weight-homogeneous: {op.to_text()}")
        shift = shifts.pop() if shifts else 0
        return -shift if self.kind.on_resolution else shift

    def operator_matrix(self, op: WeylElement, weight: int) -> List[List[Fraction]]:
        """Matrix of ``op``: M^λ → M^{λ+δ}, rows indexed by the target basis.

        Raises:
            ModuleError: If an image leaves the target weight space.
        """
        source = self.basis_at(weight)
        target = self.basis_at(weight + self.weight_shift(op))
        index = {m: i for i, m in enumerate(target)}
        rows = [[Fraction(0)] * len(source) for _ in target]
        for j, m in enumerate(source):
            for image, c in self.act(op, ModuleVector.monomial(m)).items():
                if image not in index:
                    raise ModuleError(
                        f"Image {image} of {m} is outside weight {weight + self.weight_shift(op)}"
                    )
                rows[index[image]][j] = c
        return rows

    def stacked_matrix(self, ops: Sequence[WeylElement], weight: int) -> List[List[Fraction]]:
        rows: List[List[Fraction]] = []
        for op in ops:
            rows.extend(self.operator_matrix(op, weight))
        return rows

    # Operator families

    @property
    def weight_operator(self) -> WeylElement:
        return self.realization.z_ell

    def raising_operators(self) -> List[Tuple[str, WeylElement]]:
        return self.realization.aplus_basis()

    def sl_raising(self) -> List[WeylElement]:
        return [self.realization.e(i) for i in range(1, self.rank)]

    def sl_cartan(self) -> List[WeylElement]:
        return [self.realization.h(i) for i in range(1, self.rank)]

    @property
    def lowering(self) -> WeylElement:
        return self.realization.f(self.rank)
