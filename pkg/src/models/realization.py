# stdlib
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

# first party
from src.errors import StructuralError
from src.models.weyl import WeylElement

logger = logging.getLogger(__name__)


def index_pairs(n: int) -> List[Tuple[int, int]]:
    """Symmetric index pairs (i, j), 1 <= i <= j <= n."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


@dataclass(frozen=True)
class Realization:
    """Symbols of sp_2n, its parabolic pieces and 𝔄_ℓ, mapped to Weyl elements.

    Symbols are ``e_i``, ``f_i``, ``h_i``, ``z``, ``z_ell``, ``m_i_j``,
    ``rplus_i_j``, ``rminus_i_j`` and ``aplus_i_j``. A transported
    realization has no Laurent entries; the dropped symbols are listed in
    ``skipped``.
    """

    rank: int
    twist: int
    table: Dict[str, WeylElement]
    rplus_sign: int = -1
    transported: bool = False
    skipped: Tuple[str, ...] = field(default_factory=tuple)

    def __getitem__(self, symbol: str) -> WeylElement:
        try:
            return self.table[symbol]
        except KeyError:
            raise StructuralError(f"Symbol {symbol!r} is not in this realization")

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.table

    def get(self, symbol: str) -> Optional[WeylElement]:
        return self.table.get(symbol)

    def symbols(self) -> List[str]:
        return sorted(self.table)

    def e(self, i: int) -> WeylElement:
        return self[f"e_{i}"]

    def f(self, i: int) -> WeylElement:
        return self[f"f_{i}"]

    def h(self, i: int) -> WeylElement:
        return self[f"h_{i}"]

    @property
    def z(self) -> WeylElement:
        return self["z"]

    @property
    def z_ell(self) -> WeylElement:
        return self["z_ell"]

    def m_basis(self) -> List[Tuple[str, WeylElement]]:
        n = self.rank
        return [
            (f"m_{i}_{j}", self[f"m_{i}_{j}"])
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        ]

    def _pair_basis(self, prefix: str) -> List[Tuple[str, WeylElement]]:
        return [
            (f"{prefix}_{i}_{j}", self.table[f"{prefix}_{i}_{j}"])
            for i, j in index_pairs(self.rank)
            if f"{prefix}_{i}_{j}" in self.table
        ]

    def rplus_basis(self) -> List[Tuple[str, WeylElement]]:
        return self._pair_basis("rplus")

    def rminus_basis(self) -> List[Tuple[str, WeylElement]]:
        return self._pair_basis("rminus")

    def aplus_basis(self) -> List[Tuple[str, WeylElement]]:
        return self._pair_basis("aplus")

    def to_dict(self) -> Dict[str, object]:
        return {
            "rank": self.rank,
            "twist": self.twist,
            "rplus_sign": self.rplus_sign,
            "transported": self.transported,
            "skipped": list(self.skipped),
            "table": {s: self.table[s].to_text() for s in self.symbols()},
        }


@dataclass(frozen=True)
class CartanData:
    """Type C_n data in the Bourbaki convention, a_ij = α_j(h_i)."""

    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    fundamental_weights: Tuple[str, ...]

    @classmethod
    def bourbaki_c(cls, n: int) -> "CartanData":
        if n < 2:
            raise StructuralError(f"Type C_n needs n >= 2, got {n}")
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append(2)
                elif (i, j) == (n - 1, n):
                    row.append(-2)
                elif abs(i - j) == 1:
                    row.append(-1)
                else:
                    row.append(0)
            rows.append(tuple(row))
        return cls(
            rank=n,
            cartan_matrix=tuple(rows),
            fundamental_weights=tuple(f"w_{i}" for i in range(1, n + 1)),
        )

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.cartan_matrix]

    def alpha_n_restriction(self) -> Dict[str, int]:
        """α_n restricted to the sl_n Cartan, in sl_n fundamental weights."""
        return {f"w_{self.rank - 1}": -2}
