# stdlib
import hashlib
from fractions import Fraction

# third party
import pytest

# first party
from src.utils import (
    binomial,
    ceil_div,
    compositions,
    falling_factorial,
    format_fraction,
    negative_compositions,
    parse_fraction,
    parse_int_range,
    sha256_file,
)


@pytest.mark.parametrize(
    "x, k, expected",
    [(5, 2, 20), (-1, 2, 2), (3, 0, 1), (2, 3, 0), (-2, 3, -24)],
)
def test_falling_factorial(x, k, expected):
    """Test falling factorials for positive and negative arguments."""
    assert falling_factorial(x, k) == expected


def test_ceil_div():
    """Test ceiling division on both signs."""
    assert ceil_div(3, 2) == 2
    assert ceil_div(-3, 2) == -1
    assert ceil_div(-4, 2) == -2


def test_format_fraction_always_has_denominator():
    """Test that rationals render as p/q."""
    assert format_fraction(Fraction(-1, 2)) == "-1/2"
    assert format_fraction(3) == "3/1"
    assert parse_fraction(" -3/6 ") == Fraction(-1, 2)


def test_compositions_order():
    """Test compositions come out in descending lexicographic order."""
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert list(compositions(-1, 2)) == []


def test_negative_compositions():
    """Test tuples of entries <= -1 with a fixed sum."""
    assert list(negative_compositions(-3, 2)) == [(-2, -1), (-1, -2)]
    assert list(negative_compositions(-1, 2)) == []


def test_parse_int_range():
    """Test single values, lists and inclusive ranges."""
    assert parse_int_range("-2") == [-2]
    assert parse_int_range("4,0,2") == [0, 2, 4]
    assert parse_int_range("-2:1") == [-2, -1, 0, 1]


@pytest.mark.parametrize("text", ["3:1", "", "a"])
def test_parse_int_range_invalid(text):
    """Test malformed ranges raise ValueError."""
    with pytest.raises(ValueError):
        parse_int_range(text)


def test_sha256_file(tmp_path):
    """Test artifact hashing matches hashlib."""
    path = tmp_path / "report.json"
    path.write_bytes(b"{}\n")
    assert sha256_file(path) == hashlib.sha256(b"{}\n").hexdigest()


def test_binomial_out_of_range():
    """Test binomials vanish outside 0 <= k <= n."""
    assert binomial(5, 2) == 10
    assert binomial(2, 3) == 0
    assert binomial(-1, 0) == 0
