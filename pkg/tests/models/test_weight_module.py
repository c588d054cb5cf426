# stdlib
from fractions import Fraction

# third party
import pytest

# first party
from src.errors import ModuleError, PreconditionError, StructuralError
from src.models.module_vector import ModuleVector
from src.models.weight_module import ModuleKind, SupportPredicate
from src.models.weyl import WeylElement
from src.services.module_builder import build_module


def test_module_kind_properties():
    """Test the flags that distinguish the four module families."""
    assert ModuleKind("H0_ResX") is ModuleKind.H0_RESX
    assert ModuleKind.H0_RESX.on_resolution and not ModuleKind.H0_RESX.finite
    assert ModuleKind.HTOP_Y.top_degree and not ModuleKind.HTOP_Y.on_resolution
    assert all(kind.finite for kind in ModuleKind if kind != ModuleKind.H0_RESX)


def test_support_predicate_validation():
    """Test rank and parity preconditions of the support."""
    with pytest.raises(StructuralError):
        SupportPredicate(ModuleKind.H0_RESX, 1, 0)
    with pytest.raises(PreconditionError):
        SupportPredicate(ModuleKind.H0_Y, 2, 1)
    SupportPredicate(ModuleKind.H0_RESX, 2, 1)


@pytest.mark.parametrize(
    "kind, ell, monomial, inside",
    [
        (ModuleKind.H0_RESX, 2, (2, 0, 0), True),
        (ModuleKind.H0_RESX, 2, (2, 2, 1), True),
        (ModuleKind.H0_RESX, 2, (1, 0, 0), False),
        (ModuleKind.HTOP_RESX, -2, (-1, -1, 0), True),
        (ModuleKind.HTOP_RESX, -2, (0, -2, 0), False),
        (ModuleKind.HTOP_Y, -4, (-1, -1, -1), True),
        (ModuleKind.H0_Y, 2, (0, 0, 1), True),
        (ModuleKind.H0_Y, 2, (0, 0), False),
    ],
)
def test_support_membership(kind, ell, monomial, inside):
    """Test homogeneity and sign conditions of each support region."""
    assert SupportPredicate(kind, 2, ell).contains(monomial) is inside


def test_weight_of_and_enumeration():
    """Test that enumerated monomials carry the requested weight."""
    resolution = SupportPredicate(ModuleKind.H0_RESX, 2, 2)
    assert resolution.monomials_of_weight(0) == [(2, 0, 0), (1, 1, 0), (0, 2, 0)]
    assert all(resolution.weight_of(m) == -1 for m in resolution.monomials_of_weight(-1))
    assert resolution.monomials_of_weight(1) == []

    y = SupportPredicate(ModuleKind.H0_Y, 2, 2)
    assert y.monomials_of_weight(2) == [(0, 0, 1)]
    assert y.weight_of((0, 0, 1)) == 2


def test_basis_outside_window_is_enumerated():
    """Test that weights below the window are produced on demand."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window=(0, 0))
    assert module.weights == [0]
    assert len(module.basis_at(-1)) == 5
    assert module.basis_at(1) == ()
    assert module.contains((2, 0, 0))
    assert not module.contains((4, 0, 1))


def test_weight_operator_acts_by_weight():
    """Test that z_ell acts on each basis monomial by its weight."""
    for kind, ell in [(ModuleKind.H0_RESX, 2), (ModuleKind.H0_Y, 2), (ModuleKind.HTOP_Y, -6)]:
        module = build_module(kind, 2, ell, window_depth=3)
        for weight in module.weights:
            for m in module.basis_at(weight):
                v = ModuleVector.monomial(m)
                assert module.act(module.weight_operator, v) == v.scale(weight)


def test_weight_shifts():
    """Test raising and lowering operators move weights by one."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window_depth=3)
    for _, op in module.raising_operators():
        assert module.weight_shift(op) == 1
    assert module.weight_shift(module.lowering) == -1
    assert all(module.weight_shift(e) == 0 for e in module.sl_raising())

    y = build_module(ModuleKind.H0_Y, 2, 2)
    assert y.weight_shift(y.lowering) == -1


def test_weight_shift_inhomogeneous():
    """Test that a mixed-weight operator is rejected."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window_depth=2)
    mixed = WeylElement.q(2, 3) + WeylElement.q(2, 1)
    with pytest.raises(ModuleError):
        module.weight_shift(mixed)


def test_operator_matrix_lowering():
    """Test the matrix of f_n from weight 0 to weight -1."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window_depth=3)
    matrix = module.operator_matrix(module.lowering, 0)
    assert len(matrix) == 5
    assert len(matrix[0]) == 3
    # f_2 Q_1^2 = -1/2 Q_1^2 Q_2^2 Q_3
    assert matrix[2][0] == Fraction(-1, 2)
    assert sum(1 for row in matrix for c in row if c != 0) == 3


def test_stacked_matrix_shape():
    """Test stacking keeps one block of rows per operator."""
    module = build_module(ModuleKind.H0_RESX, 2, 2, window_depth=3)
    ops = [op for _, op in module.raising_operators()]
    stacked = module.stacked_matrix(ops, -1)
    assert len(stacked) == len(ops) * module.dimension(0)
    assert all(len(row) == module.dimension(-1) for row in stacked)
