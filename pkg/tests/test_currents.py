"""Evaluation modules and the current-operator calculus."""

import pytest

from repcur.currents import (
    CurrentOperator,
    EvaluationModule,
    InvariantTensor,
    current_operator_matrix,
    evaluation_action,
    invariant_operator_matrix,
    theta_operator,
)
from repcur.invariants import Permutation, casimir_tensor, theta_sigma_gl
from repcur.liealg import GL, SP, build_lie_algebra
from repcur.linalg import Mat
from repcur.modules import standard_module
from repcur.poly import Poly, lagrange_interpolant
from repcur.rational import Q


@pytest.fixture(scope="module")
def gl2():
    return build_lie_algebra(GL, 2)


@pytest.fixture(scope="module")
def em3(gl2):
    v = standard_module(gl2)
    return EvaluationModule([v, v, v], [Q(0), Q(1), Q(2)])


def test_point_count_must_match(gl2):
    v = standard_module(gl2)
    with pytest.raises(ValueError):
        EvaluationModule([v, v], [Q(0)])


def test_basis_action_scales_by_point_values(em3):
    one = Poly.constant(1)
    t = Poly.monomial(1)
    for b in range(4):
        a0 = em3.basis_action(b, one)
        a1 = em3.basis_action(b, t)
        a2 = em3.basis_action(b, Poly.monomial(2))
        # on the points (0, 1, 2), t^3 interpolates to 3 t^2 - 2 t
        a3 = em3.basis_action(b, Poly.monomial(3))
        assert a3 == a2.scale(3) - a1.scale(2)
        assert a0 == em3.basis_action(b, Poly.constant(1))


def test_bracket_homomorphism(gl2, em3):
    """[x(P), y(Q)] acts as [x, y](PQ) on an evaluation module."""
    p = Poly([1, 2])
    q = Poly([0, 0, 1])
    for i in [0, 1, 3]:
        for j in [1, 2]:
            lhs = em3.basis_action(i, p).commutator(em3.basis_action(j, q))
            xy = gl2.basis[i].commutator(gl2.basis[j])
            rhs = evaluation_action(xy, p * q, em3) if not xy.is_zero() else None
            if rhs is None:
                assert lhs.is_zero()
            else:
                assert lhs == rhs


def test_evaluation_action_accepts_matrices_and_coords(gl2, em3):
    p = Poly([1, 1])
    x = gl2.basis[1]
    by_matrix = evaluation_action(x, p, em3)
    by_coords = evaluation_action([Q(0), Q(1), Q(0), Q(0)], p, em3)
    by_index = evaluation_action(1, p, em3)
    assert by_matrix == by_coords == by_index


def test_interpolation_losslessness(em3):
    """Any polynomial acts like its degree < d interpolant on d points."""
    p = Poly([5, -3, 0, 2, 1])  # degree 4
    interp = lagrange_interpolant(em3.points, [p(x) for x in em3.points])
    assert interp.degree <= 2
    for b in range(4):
        assert em3.basis_action(b, p) == em3.basis_action(b, interp)


def test_theta_operator_expansion_matches_fast_path(gl2, em3):
    theta = theta_sigma_gl(Permutation((2, 1, 3)), 2)
    polys = [Poly([1, 1]), Poly([0, 2]), Poly([1, 0, 1])]
    slow = current_operator_matrix(theta_operator(theta, polys), em3)
    fast = invariant_operator_matrix(theta, polys, em3)
    assert slow == fast


def test_theta_operator_arity_check(gl2):
    theta = casimir_tensor(gl2)
    with pytest.raises(ValueError):
        theta_operator(theta, [Poly.monomial(0)])


def test_current_operator_rejects_negative_degrees():
    with pytest.raises(ValueError):
        CurrentOperator(((Q(1), ((0, -1),)),))


def test_empty_word_gives_identity(em3):
    op = CurrentOperator(((Q(3), ()),))
    assert current_operator_matrix(op, em3) == Mat.identity(em3.dim).scale(3)


def test_invariant_tensor_algebra():
    a = InvariantTensor.from_dict(2, {(0, 1): Q(1)})
    b = InvariantTensor.from_dict(2, {(0, 1): Q(-1), (1, 0): Q(2)})
    s = a + b
    assert s.terms == ((Q(2), (1, 0)),)
    assert a.scale(0).is_zero()
    assert a.canonical_key() == a.scale(Q(7, 3)).canonical_key()


def test_sp_evaluation_module_dimensions():
    sp2 = build_lie_algebra(SP, 1)
    v = standard_module(sp2)
    em = EvaluationModule([v, v], [Q(0), Q(1)])
    assert em.dim == 4
    assert em.d == 2
    assert em.has_distinct_points()
    assert not EvaluationModule([v, v], [Q(1), Q(1)]).has_distinct_points()
