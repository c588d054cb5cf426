# stdlib
import hashlib
import logging
import math
import pathlib
from fractions import Fraction
from typing import Iterator, List, Tuple, Union

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def falling_factorial(x: int, k: int) -> int:
    """Return x(x-1)...(x-k+1); valid for negative x, 1 when k == 0."""
    result = 1
    for i in range(k):
        result *= x - i
    return result


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def format_fraction(value: Rational) -> str:
    """Render an exact rational as "p/q" (denominator always present)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Yield all tuples of `parts` nonnegative integers summing to `total`.

    Tuples come out in descending lexicographic order, which keeps module
    bases and reports deterministic.
    """
    if total < 0 or parts <= 0:
        if total == 0 and parts == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def negative_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Yield tuples of `parts` integers, each <= -1, summing to `total`."""
    slack = -total - parts
    if slack < 0:
        return
    for c in compositions(slack, parts):
        yield tuple(-1 - x for x in c)


def parse_int_range(text: str) -> List[int]:
    """Parse "-2", "0,2,4" or an inclusive range "a:b" into a list of ints.

    Raises:
        ValueError: If any piece is not an integer or a range is reversed.
    """
    values: List[int] = []
    for piece in str(text).split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ":" in piece[1:]:
            idx = piece.index(":", 1)
            lo, hi = int(piece[:idx]), int(piece[idx + 1 :])
            if lo > hi:
                raise ValueError(f"Invalid range {piece}: start exceeds end")
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(piece))
    if not values:
        raise ValueError(f"Empty integer range: {text!r}")
    return sorted(set(values))


def sha256_file(path: Union[str, pathlib.Path]) -> str:
    digest = hashlib.sha256(pathlib.Path(path).read_bytes()).hexdigest()
    logger.debug("Hashed artifact", extra={"path": str(path), "sha256": digest})
    return digest


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
