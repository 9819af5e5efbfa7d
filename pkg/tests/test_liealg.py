"""Structure of the classical families: brackets, forms, dual bases."""

import pytest

from repcur.liealg import (
    GL,
    SO,
    SP,
    build_lie_algebra,
    casimir_dual_bases,
    sign_function,
    symplectic_form_matrix,
)
from repcur.linalg import Mat
from repcur.rational import Q


DIMS = {
    (GL, 2): 4,
    (GL, 3): 9,
    (SP, 1): 3,
    (SP, 2): 10,
    (SO, 3): 3,
    (SO, 4): 6,
}


@pytest.mark.parametrize("family,n", sorted(DIMS))
def test_dimensions(family, n):
    assert build_lie_algebra(family, n).dim == DIMS[(family, n)]


@pytest.mark.parametrize("family,n", [(GL, 2), (SP, 1), (SP, 2), (SO, 3), (SO, 4)])
def test_bracket_table_matches_matrices(family, n):
    spec = build_lie_algebra(family, n)
    for i in range(spec.dim):
        for j in range(spec.dim):
            lhs = spec.basis[i].commutator(spec.basis[j])
            rhs = spec.element(
                [spec.bracket[(i, j)].get(k, Q(0)) for k in range(spec.dim)]
            )
            assert lhs == rhs


@pytest.mark.parametrize("family,n", [(GL, 2), (SP, 2), (SO, 4)])
def test_jacobi_identity(family, n):
    spec = build_lie_algebra(family, n)
    b = spec.basis
    for x in b[:3]:
        for y in b[-3:]:
            for z in b[:: max(1, spec.dim // 3)]:
                jac = (
                    x.commutator(y.commutator(z))
                    + y.commutator(z.commutator(x))
                    + z.commutator(x.commutator(y))
                )
                assert jac.is_zero()


@pytest.mark.parametrize("family,n", [(GL, 2), (SP, 2), (SO, 4)])
def test_dual_basis_pairing(family, n):
    spec = build_lie_algebra(family, n)
    for i, ei in enumerate(spec.basis):
        for j, fj in enumerate(spec.dual_basis):
            assert (ei * fj).trace() == (Q(1) if i == j else Q(0))
    assert len(casimir_dual_bases(spec)) == spec.dim


def test_sp_elements_preserve_the_form():
    n = 2
    spec = build_lie_algebra(SP, n)
    jhat = symplectic_form_matrix(n)
    for x in spec.basis:
        assert (x.transpose() * jhat + jhat * x).is_zero()


def test_so_elements_are_antisymmetric():
    spec = build_lie_algebra(SO, 4)
    for x in spec.basis:
        assert (x + x.transpose()).is_zero()


def test_coords_round_trip_and_membership():
    spec = build_lie_algebra(SP, 1)
    x = spec.element([Q(1), Q(-2), Q(1, 3)])
    assert spec.coords(x) == [Q(1), Q(-2), Q(1, 3)]
    not_sp = Mat.from_entries(2, 2, {(0, 0): Q(1)})
    with pytest.raises(ValueError):
        spec.coords(not_sp)


def test_sign_function():
    assert sign_function(2, 1) == 1
    assert sign_function(2, 2) == 1
    assert sign_function(2, 3) == -1
    assert sign_function(2, 4) == -1
    with pytest.raises(ValueError):
        sign_function(2, 5)


def test_cartan_split_only_where_rational():
    assert build_lie_algebra(GL, 2).cartan_indices is not None
    assert build_lie_algebra(SP, 2).cartan_indices is not None
    assert build_lie_algebra(SO, 3).cartan_indices is None


@pytest.mark.parametrize(
    "family,n,err", [(GL, 0, True), (SP, 0, True), (SO, 1, True), ("xx", 2, True)]
)
def test_rejects_bad_parameters(family, n, err):
    with pytest.raises(ValueError):
        build_lie_algebra(family, n)
