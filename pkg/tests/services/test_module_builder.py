# third party
import pytest

# first party
from src.errors import PreconditionError, StructuralError
from src.models.weight_module import ModuleKind
from src.services.module_builder import (
    build_module,
    expected_dimension,
    expected_weight_range,
    graded_dimension,
    realization_for,
)


def test_h0_resolution_dimensions():
    """Test H0 on the resolution against the binomial dimension law."""
    module = build_module(ModuleKind.H0_RESX, 3, 2, window=(-2, 0))
    assert module.weights == [0, -1, -2]
    assert [module.dimension(w) for w in module.weights] == [6, 15, 28]
    assert all(module.dimension(w) == expected_dimension(3, 2, w) for w in module.weights)
    assert module.untrusted == (-2,)


def test_h0_resolution_auto_window():
    """Test the infinite module gets a window of the requested depth under its top."""
    module = build_module(ModuleKind.H0_RESX, 2, 1)
    assert module.window == (-5, 0)
    assert module.top_weight == 0
    assert module.untrusted == (-5,)

    shallow = build_module(ModuleKind.H0_RESX, 2, 1, window_depth=2)
    assert shallow.window == (-1, 0)


def test_htop_resolution():
    """Test the top cohomology on the resolution."""
    module = build_module(ModuleKind.HTOP_RESX, 2, -2)
    assert module.weights == [0]
    assert module.basis_at(0) == ((-1, -1, 0),)
    assert module.untrusted == ()
    assert build_module(ModuleKind.HTOP_RESX, 2, -1).is_empty()


def test_y_modules():
    """Test H0 and top cohomology on the weighted space."""
    h0 = build_module(ModuleKind.H0_Y, 2, 2)
    assert h0.weights == [2, 1]
    assert [h0.dimension(w) for w in h0.weights] == [1, 3]

    top = build_module(ModuleKind.HTOP_Y, 2, -4)
    assert top.monomials() == [(-1, -1, -1)]

    deeper = build_module(ModuleKind.HTOP_Y, 2, -6)
    assert deeper.weights == [0, -1]
    assert [deeper.dimension(w) for w in deeper.weights] == [3, 1]
    assert sum(deeper.dimension(w) for w in deeper.weights) == graded_dimension(2, 2)


@pytest.mark.parametrize(
    "kind, n, ell, expected",
    [
        (ModuleKind.H0_RESX, 2, 3, (None, 0)),
        (ModuleKind.H0_RESX, 2, -3, (None, -2)),
        (ModuleKind.HTOP_RESX, 2, -3, (0, 0)),
        (ModuleKind.HTOP_RESX, 2, -6, (-2, 0)),
        (ModuleKind.HTOP_RESX, 3, -2, None),
        (ModuleKind.H0_Y, 2, 4, (1, 3)),
        (ModuleKind.H0_Y, 2, -2, None),
        (ModuleKind.HTOP_Y, 2, -6, (-1, 0)),
        (ModuleKind.HTOP_Y, 2, -2, None),
    ],
)
def test_expected_weight_range(kind, n, ell, expected):
    """Test the closed-form weight ranges."""
    assert expected_weight_range(kind, n, ell) == expected


@pytest.mark.parametrize(
    "kind, n, ell",
    [
        (ModuleKind.HTOP_RESX, 2, -5),
        (ModuleKind.HTOP_RESX, 3, -7),
        (ModuleKind.H0_Y, 3, 4),
        (ModuleKind.HTOP_Y, 2, -8),
    ],
)
def test_enumerated_range_matches_closed_form(kind, n, ell):
    """Test that enumeration finds exactly the closed-form weight range."""
    module = build_module(kind, n, ell)
    low, high = expected_weight_range(kind, n, ell)
    assert module.weights == list(range(high, low - 1, -1))


def test_graded_dimension():
    """Test monomial counts in the ring graded by (1, ..., 1, 2)."""
    assert graded_dimension(2, 0) == 1
    assert graded_dimension(2, 2) == 4
    assert graded_dimension(3, 2) == 7
    assert graded_dimension(2, -1) == 0


def test_build_module_errors():
    """Test reversed windows, bad depths and odd Y twists are rejected."""
    with pytest.raises(StructuralError):
        build_module(ModuleKind.H0_RESX, 2, 0, window=(0, -2))
    with pytest.raises(StructuralError):
        build_module(ModuleKind.H0_RESX, 2, 0, window_depth=0)
    with pytest.raises(PreconditionError):
        build_module(ModuleKind.H0_Y, 2, 1)


def test_realization_for_y_is_transported():
    """Test Y-modules use the transported table of the shifted twist."""
    r = realization_for(ModuleKind.H0_Y, 2, 2)
    assert r.transported
    assert r.twist == 4
    assert not realization_for(ModuleKind.H0_RESX, 2, 2).transported
