# stdlib
from fractions import Fraction

# third party
import pytest

# first party
from src.errors import StructuralError
from src.models.realization import CartanData
from src.models.ring_spec import RingKind, RingSpec
from src.models.weyl import WeylElement, commutator
from src.services.lie_realization import (
    a_ell_generating_set,
    build_realization,
    decompose,
    verify_parabolic,
    verify_sp2n,
)
from src.services.toric_rings import is_member


def test_build_realization_requires_rank_two():
    """Test that rank 1 is rejected."""
    with pytest.raises(StructuralError):
        build_realization(1, 0)


def test_missing_symbol(realization2):
    """Test that unknown symbols raise StructuralError."""
    with pytest.raises(StructuralError):
        realization2["e_9"]
    assert realization2.get("e_9") is None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sp2n_relations(n):
    """Test the Chevalley-Serre relations and the C_n Cartan matrix."""
    report = verify_sp2n(build_realization(n, 0))
    assert report.failures == []
    assert report.cartan_matrix == CartanData.bourbaki_c(n).as_lists()
    assert report.passed


def test_cartan_matrix_c2():
    """Test the rank-2 Cartan matrix in the Bourbaki convention."""
    assert CartanData.bourbaki_c(2).as_lists() == [[2, -2], [-1, 2]]


@pytest.mark.parametrize("ell", range(-4, 5))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_parabolic_relations(n, ell):
    """Test the grading and closure brackets of the parabolic pieces."""
    report = verify_parabolic(build_realization(n, ell))
    assert report.passed
    assert report.skipped == []


def test_z_ell_grades_pieces(realization2):
    """Test z_ell is central in gl_n and raises aplus by one."""
    for _, x in realization2.aplus_basis():
        assert commutator(realization2.z_ell, x) == x
    for _, m in realization2.m_basis():
        assert commutator(realization2.z_ell, m).is_zero()


def test_decompose():
    """Test exact decomposition in a basis of Weyl elements."""
    q1 = WeylElement.q(2, 1)
    q2 = WeylElement.q(2, 2)
    assert decompose(q1.scale(3) - q2, [q1, q2]) == [Fraction(3), Fraction(-1)]
    assert decompose(WeylElement.q(2, 3), [q1, q2]) is None


def test_a_ell_generating_set(realization2):
    """Test the generating set lists 1, gl_n, z_ell, rminus and aplus."""
    labels = [name for name, _ in a_ell_generating_set(realization2)]
    assert len(labels) == 12
    assert labels[0] == "1"
    assert labels[5] == "z_ell"
    assert labels[-1].startswith("aplus_")


@pytest.mark.parametrize("n", [2, 3])
def test_table_membership(n):
    """Test which table entries lie in ResolutionX and which only in SingularX."""
    r = build_realization(n, -2)
    resolution = RingSpec(RingKind.RESOLUTION_X, n, -2)
    singular = RingSpec(RingKind.SINGULAR_X, n)
    entries = [r.e(i) for i in range(1, n)] + [r.f(i) for i in range(1, n + 1)]
    entries += [r.h(i) for i in range(1, n + 1)]
    entries += [x for _, x in r.m_basis() + r.rminus_basis() + r.aplus_basis()]
    assert all(is_member(x, resolution) for x in entries)
    assert not is_member(r.e(n), resolution)
    assert is_member(r.e(n), singular)


@pytest.mark.parametrize("n", [2, 3])
def test_table_degrees(n):
    """Test the degree each piece of the grading demands."""
    r = build_realization(n, 0)
    for i in range(1, n + 1):
        assert r.h(i).degrees() == [0]
    for i in range(1, n):
        assert r.e(i).degrees() == [0]
        assert r.f(i).degrees() == [0]
    assert r.f(n).degrees() == [3]
    assert r.e(n).degrees() == [-3]
    assert all(m.degrees() == [0] for _, m in r.m_basis())
    assert all(y.degrees() == [3] for _, y in r.rminus_basis())
    assert all(x.degrees() == [-3] for _, x in r.aplus_basis())


@pytest.mark.parametrize("ell", [-2, 0, 3])
def test_a_ell_generating_set_members(ell):
    """Test every generator of 𝔄_ℓ lies in ResolutionX and e_n is left out."""
    r = build_realization(2, ell)
    generating = a_ell_generating_set(r)
    ring = RingSpec(RingKind.RESOLUTION_X, 2, ell)
    assert all(is_member(x, ring) for _, x in generating)
    assert all(x != r.e(2) for _, x in generating)
