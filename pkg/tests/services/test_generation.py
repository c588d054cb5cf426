# stdlib
from fractions import Fraction

# third party
import pytest

# first party
from src.errors import ModuleError
from src.models.module_vector import ModuleVector
from src.models.ring_spec import RingKind, RingSpec
from src.models.weight_module import ModuleKind
from src.models.weyl import WeylElement, apply
from src.services.generation import (
    check_generation,
    displayed_agreement,
    displayed_prefactor,
    lift_operator,
    module_generator,
)
from src.services.module_builder import build_module
from src.services.toric_rings import is_member


@pytest.mark.parametrize(
    "kind, n, ell, expected",
    [
        (ModuleKind.H0_RESX, 2, 2, (0, 2, 0)),
        (ModuleKind.H0_RESX, 2, -2, (0, 0, 1)),
        (ModuleKind.H0_RESX, 2, -1, (0, 1, 1)),
        (ModuleKind.HTOP_RESX, 2, -3, (-2, -1, 0)),
        (ModuleKind.H0_Y, 2, 2, (0, 0, 1)),
        (ModuleKind.HTOP_Y, 2, -6, (-3, -1, -1)),
    ],
)
def test_module_generator(kind, n, ell, expected):
    """Test the generating monomial of each family lies in its module."""
    generator = module_generator(kind, n, ell)
    assert generator == expected
    assert build_module(kind, n, ell).contains(generator)


def test_lift_operator_polynomial():
    """Test the lift from Q_2^2 to Q_1^2 Q_2^2 Q_3."""
    op = lift_operator((0, 2, 0), (2, 2, 1))
    assert op == WeylElement.monomial(2, (2, 2, 1), (0, 2, 0), coeff=Fraction(1, 2))
    assert is_member(op, RingSpec(RingKind.RESOLUTION_X, 2, 2))
    assert apply(op, ModuleVector.monomial((0, 2, 0))) == ModuleVector.monomial((2, 2, 1))


def test_lift_operator_laurent():
    """Test the lift between negative exponents."""
    op = lift_operator((-2, -1, 0), (-1, -2, 0))
    assert op == WeylElement.monomial(2, (1, 0, 0), (0, 1, 0), coeff=-1)
    assert apply(op, ModuleVector.monomial((-2, -1, 0))) == ModuleVector.monomial((-1, -2, 0))


def test_lift_operator_unreachable():
    """Test that a nonnegative exponent cannot be reached from a negative one."""
    with pytest.raises(ModuleError):
        lift_operator((-2, -1, 0), (0, -3, 0))


def test_displayed_prefactor():
    """Test the printed normalization against the exact lift coefficient."""
    assert displayed_prefactor(2, -3, (-1, -2, 0)) == Fraction(-1, 6)
    assert displayed_prefactor(2, -3, (-2, -1, 0)) == Fraction(1, 24)


def test_displayed_prefactor_sign_ignores_last_exponent():
    """Test only the first n exponents enter the sign."""
    assert displayed_prefactor(2, -4, (-1, -1, 1)) == Fraction(1, 12)
    assert displayed_prefactor(2, -4, (-1, -1, 0)) == Fraction(1, 12)


def test_certificate_top_resolution():
    """Test certificates for the top cohomology record the displayed prefactor."""
    module = build_module(ModuleKind.HTOP_RESX, 2, -3)
    report = check_generation(module, (-2, -1, 0))
    assert report.generated
    assert report.covered_weights == [0]
    target = next(c for c in report.certificates if c["target"] == [-1, -2, 0])
    assert target["coefficient"] == "-1/1"
    assert target["displayed_coefficient"] == "-1/6"
    assert target["displayed_matches"] is False
    assert displayed_agreement(report) is False


def test_certificate_h0_y():
    """Test the H0 generator on Y reaches every basis monomial."""
    module = build_module(ModuleKind.H0_Y, 2, 2)
    report = check_generation(module, (0, 0, 1))
    assert report.generated
    assert len(report.certificates) == 4
    assert all(c["member"] and c["maps_to_target"] for c in report.certificates)
    assert displayed_agreement(report) is None


def test_closure_h0_resolution():
    """Test closure under the generating set spans every trusted weight."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window_depth=3)
    report = check_generation(module, (0, 2, 0), strategy="closure")
    assert report.generated
    assert report.failures == []
    assert set(report.covered_weights) >= {0, -1}


def test_check_generation_errors():
    """Test unknown strategies and foreign monomials are rejected."""
    module = build_module(ModuleKind.H0_Y, 2, 2)
    with pytest.raises(ValueError):
        check_generation(module, (0, 0, 1), strategy="guess")
    with pytest.raises(ModuleError):
        check_generation(module, (1, 0, 0))
