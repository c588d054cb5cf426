# stdlib
import random

# third party
import pytest

# first party
from src.errors import PreconditionError, StructuralError
from src.models.module_vector import ModuleVector
from src.models.ring_spec import RingKind, RingSpec
from src.models.weight_module import ModuleKind, SupportPredicate
from src.models.weyl import WeylElement, apply, product
from src.services.toric_rings import (
    admissible_monomials,
    euler_relation,
    generators,
    is_member,
    span_oracle,
)


def test_ring_spec_validation():
    """Test rank and parity preconditions."""
    with pytest.raises(StructuralError):
        RingSpec(RingKind.RESOLUTION_X, 0)
    with pytest.raises(PreconditionError):
        RingSpec(RingKind.WEIGHTED_Y, 2, 1)
    assert RingSpec(RingKind.SINGULAR_X, 2).label() == "SingularX(n=2)"


@pytest.mark.parametrize(
    "mu, nu, kind, expected",
    [
        ((1, 0, 0), (0, 1, 0), RingKind.RESOLUTION_X, True),
        ((1, 1, 1), (0, 0, 0), RingKind.RESOLUTION_X, True),
        ((0, 0, 0), (1, 1, 1), RingKind.RESOLUTION_X, True),
        ((0, 0, -1), (1, 1, 0), RingKind.SINGULAR_X, True),
        ((0, 0, -1), (1, 1, 0), RingKind.RESOLUTION_X, False),
        ((1, 0, 0), (0, 0, 0), RingKind.RESOLUTION_X, False),
        ((0, 0, 1), (1, 1, 0), RingKind.WEIGHTED_Y, True),
    ],
)
def test_membership(mu, nu, kind, expected):
    """Test homogeneity and sign rules of each ring."""
    element = WeylElement.monomial(2, mu, nu, laurent=mu[-1] < 0)
    assert is_member(element, RingSpec(kind, 2)) is expected


def test_membership_rank_mismatch():
    """Test that elements of another rank are rejected."""
    with pytest.raises(StructuralError):
        is_member(WeylElement.q(3, 1), RingSpec(RingKind.RESOLUTION_X, 2))


@pytest.mark.parametrize("kind", list(RingKind))
@pytest.mark.parametrize("n, counts", [(2, (5, 3, 3)), (3, (10, 6, 6))])
def test_generator_counts(kind, n, counts):
    """Test generator classes have n^2+1 and n(n+1)/2 members."""
    gens = generators(RingSpec(kind, n))
    assert gens.counts() == counts


@pytest.mark.parametrize("kind", list(RingKind))
def test_generators_are_members(kind):
    """Test that every generator and the Euler relation lie in their ring."""
    ring = RingSpec(kind, 2, 0)
    gens = generators(ring)
    assert all(is_member(g.element, ring) for g in gens.all())
    assert is_member(euler_relation(ring), ring)


def test_generator_labels():
    """Test the resolution generator labels."""
    labels = [g.label for g in generators(RingSpec(RingKind.RESOLUTION_X, 2)).all()]
    assert "Q1P2" in labels
    assert "Q3P3" in labels
    assert "Q1Q2Q3" in labels
    assert "P2P2P3" in labels
    singular = [g.label for g in generators(RingSpec(RingKind.SINGULAR_X, 2)).all()]
    assert "P1P2Q3^-1" in singular


def test_euler_relation_resolution():
    """Test ΣQ_iP_i - 2Q_{n+1}P_{n+1} - ℓ on ResolutionX."""
    euler = euler_relation(RingSpec(RingKind.RESOLUTION_X, 2, 3))
    assert euler.coefficient((1, 0, 0), (1, 0, 0)) == 1
    assert euler.coefficient((0, 0, 1), (0, 0, 1)) == -2
    assert euler.coefficient((0, 0, 0), (0, 0, 0)) == -3


def test_admissible_monomials_sorted():
    """Test admissible monomials are members sorted by order."""
    ring = RingSpec(RingKind.RESOLUTION_X, 2, 0)
    keys = admissible_monomials(ring, 3)
    assert keys[0] == ((0, 0, 0), (0, 0, 0))
    orders = [sum(abs(x) for x in mu) + sum(nu) for mu, nu in keys]
    assert orders == sorted(orders)
    assert ((1, 1, 1), (0, 0, 0)) in keys


def test_span_oracle_resolution():
    """Test low-order monomials of ResolutionX are spanned with certificates."""
    report = span_oracle(RingSpec(RingKind.RESOLUTION_X, 2, 0), max_order=3, max_word_len=2)
    assert report.all_spanned
    entry = next(e for e in report.entries if e.monomial == "Q^[1,1,1] P^[0,0,0]")
    assert entry.certificate == [{"word": "Q1Q2Q3", "coeff": "1/1"}]


def test_span_oracle_minimal_word_length():
    """Test the minimal word length needed per order on SingularX."""
    report = span_oracle(RingSpec(RingKind.SINGULAR_X, 2), max_order=2, max_word_len=2)
    assert report.minimal_word_length == {0: 0, 1: 0, 2: 1}
    assert report.twist is None


def test_span_oracle_reports_unspanned():
    """Test that a word length of zero only spans constants."""
    report = span_oracle(RingSpec(RingKind.RESOLUTION_X, 2, 0), max_order=2, max_word_len=0)
    assert not report.all_spanned
    assert report.minimal_word_length[2] is None


@pytest.mark.parametrize(
    "kind, twist",
    [(RingKind.SINGULAR_X, 0), (RingKind.RESOLUTION_X, -2), (RingKind.WEIGHTED_Y, 2)],
)
def test_membership_multiplicative(kind, twist):
    """Test products of random member pairs have only member terms."""
    ring = RingSpec(kind, 2, twist)
    members = admissible_monomials(ring, 3)
    rng = random.Random(3)
    for _ in range(25):
        a, b = (rng.choice(members) for _ in range(2))
        x = WeylElement.monomial(2, a[0], a[1], laurent=a[0][-1] < 0)
        y = WeylElement.monomial(2, b[0], b[1], laurent=b[0][-1] < 0)
        assert is_member(product(x, y), ring)


@pytest.mark.parametrize(
    "kind, module_kind, ell",
    [
        (RingKind.SINGULAR_X, ModuleKind.H0_RESX, 0),
        (RingKind.RESOLUTION_X, ModuleKind.H0_RESX, 3),
        (RingKind.RESOLUTION_X, ModuleKind.H0_RESX, -2),
        (RingKind.RESOLUTION_X, ModuleKind.HTOP_RESX, -4),
    ],
)
def test_euler_relation_annihilates_covariants(kind, module_kind, ell):
    """Test the Euler relation kills every covariant monomial of the twist."""
    euler = euler_relation(RingSpec(kind, 2, ell))
    covariants = SupportPredicate(module_kind, 2, ell)
    monomials = [m for w in range(-4, 3) for m in covariants.monomials_of_weight(w)]
    assert monomials
    for m in monomials:
        assert apply(euler, ModuleVector.monomial(m)).is_zero()
