"""Evaluation modules of g[t] and the current-operator calculus.

An evaluation module attaches a point p_i to each tensor factor; x(P) acts
on the i-th factor scaled by P(p_i).  Invariant tensors give elements
θ(P_1,...,P_k) of the enveloping algebra whose matrices on an evaluation
module are assembled here.  Operator words compose with the rightmost
factor applying first (the standard left-module convention).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .liealg import LieAlgebraSpec
from .linalg import Mat
from .modules import GModule, _promote, tensor_module
from .poly import Poly
from .rational import Q, ZERO, ONE


@dataclass(frozen=True)
class InvariantTensor:
    """Formal sum Σ c · b_{i_1} ⊗ ... ⊗ b_{i_k} over spec basis indices."""

    k: int
    terms: tuple  # ((coeff, (i_1, ..., i_k)), ...) with zero coeffs dropped

    @classmethod
    def from_dict(cls, k: int, coeffs: dict) -> "InvariantTensor":
        items = tuple(
            (c, idx) for idx, c in sorted(coeffs.items()) if c
        )
        return cls(k, items)

    def scale(self, c) -> "InvariantTensor":
        c = Q(c)
        return InvariantTensor(
            self.k, tuple((c * a, idx) for a, idx in self.terms if c * a)
        )

    def __add__(self, other: "InvariantTensor") -> "InvariantTensor":
        if self.k != other.k:
            raise ValueError("tensor degree mismatch")
        acc = {}
        for c, idx in self.terms + other.terms:
            acc[idx] = acc.get(idx, ZERO) + c
        return InvariantTensor.from_dict(self.k, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def canonical_key(self):
        """Hashable normal form (used to deduplicate proportional tensors)."""
        if not self.terms:
            return (self.k,)
        lead = self.terms[0][0]
        return (self.k,) + tuple((idx, c / lead) for c, idx in self.terms)


@dataclass(frozen=True)
class CurrentOperator:
    """Formal sum of words in degree-tagged generators x(t^m)."""

    terms: tuple  # ((coeff, ((basis_index, degree), ...)), ...)

    def __post_init__(self):
        for _, word in self.terms:
            for _, m in word:
                if m < 0:
                    raise ValueError("current degrees must be non-negative")


class EvaluationModule:
    """Tensor product of g-modules with one evaluation point per factor."""

    def __init__(self, factors: list, points: list):
        if len(points) != len(factors):
            raise ValueError("need exactly one point per tensor factor")
        self.factors = list(factors)
        self.points = [Q(p) for p in points]
        self.spec: LieAlgebraSpec = factors[0].spec
        self.carrier: GModule = tensor_module(self.factors)
        self.dims = [f.dim for f in self.factors]
        self._factor_actions: dict = {}
        self._poly_cache: dict = {}

    @property
    def d(self) -> int:
        return len(self.factors)

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def has_distinct_points(self) -> bool:
        return len(set(self.points)) == len(self.points)

    def _promoted(self, basis_index: int, factor: int) -> Mat:
        key = (basis_index, factor)
        cached = self._factor_actions.get(key)
        if cached is None:
            cached = _promote(
                self.factors[factor].actions[basis_index], self.dims, factor
            )
            self._factor_actions[key] = cached
        return cached

    def basis_action(self, basis_index: int, poly: Poly) -> Mat:
        """Matrix of b(P): Σ_i P(p_i) (1 ⊗ ... ⊗ action_i(b) ⊗ ... ⊗ 1)."""
        key = (basis_index, poly.coeffs)
        cached = self._poly_cache.get(key)
        if cached is not None:
            return cached
        out = Mat.zeros(self.dim, self.dim)
        for i, p in enumerate(self.points):
            v = poly(p)
            if v:
                out = out + self._promoted(basis_index, i).scale(v)
        self._poly_cache[key] = out
        return out


def evaluation_action(x, poly: Poly, em: EvaluationModule) -> Mat:
    """Matrix of x(P) on the evaluation module.

    x may be a basis index, a coordinate vector, or a matrix in the span of
    the spec basis.  Linear in both x and P.
    """
    if isinstance(x, int):
        return em.basis_action(x, poly)
    if isinstance(x, Mat):
        coords = em.spec.coords(x)
    else:
        coords = list(x)
    out = Mat.zeros(em.dim, em.dim)
    for i, c in enumerate(coords):
        if c:
            out = out + em.basis_action(i, poly).scale(c)
    return out


def theta_operator(theta: InvariantTensor, polys: list) -> CurrentOperator:
    """Multilinear expansion of θ(P_1,...,P_k) into degree-tagged words."""
    if len(polys) != theta.k:
        raise ValueError(
            f"arity mismatch: tensor degree {theta.k}, got {len(polys)} polynomials"
        )
    monomials = [list(p.monomials()) for p in polys]
    out = []
    for coeff, indices in theta.terms:
        choices = [(coeff, ())]
        for j, idx in enumerate(indices):
            nxt = []
            for c, word in choices:
                for m, cm in monomials[j]:
                    nxt.append((c * cm, word + ((idx, m),)))
            choices = nxt
        out.extend(choices)
    return CurrentOperator(tuple(out))


def current_operator_matrix(op: CurrentOperator, em: EvaluationModule) -> Mat:
    """Σ_terms coeff · M_1 M_2 ... M_k, rightmost factor applying first."""
    out = Mat.zeros(em.dim, em.dim)
    for coeff, word in op.terms:
        m = None
        for idx, deg in word:
            step = em.basis_action(idx, Poly.monomial(deg))
            m = step if m is None else m * step
        if m is None:
            m = Mat.identity(em.dim)
        out = out + m.scale(coeff)
    return out


def invariant_operator_matrix(
    theta: InvariantTensor, polys: list, em: EvaluationModule
) -> Mat:
    """Matrix of θ(P_1,...,P_k) assembled without monomial expansion.

    Equal to current_operator_matrix(theta_operator(theta, polys), em) by
    linearity of the evaluation action in each polynomial; this form caches
    one matrix per (basis element, polynomial) and is the fast path.
    """
    if len(polys) != theta.k:
        raise ValueError(
            f"arity mismatch: tensor degree {theta.k}, got {len(polys)} polynomials"
        )
    out = Mat.zeros(em.dim, em.dim)
    for coeff, indices in theta.terms:
        m = None
        for j, idx in enumerate(indices):
            step = em.basis_action(idx, polys[j])
            m = step if m is None else m * step
        if m is None:
            m = Mat.identity(em.dim)
        out = out + m.scale(coeff)
    return out
