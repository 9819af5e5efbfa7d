"""Finite dimensional modules: construction and decomposition.

Irreducible modules are cut out of tensor powers of the standard module by
highest-weight cyclic generation: solve for a highest weight vector (joint
kernel of the raising actions inside the target weight space), then close
under the lowering actions.  One algorithm serves gl and sp; so is excluded
from weight machinery (its orthonormal realization has no rational split
Cartan) and enters only through tensor powers and commutant-based checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liealg import GL, SO, SP, LieAlgebraSpec
from .linalg import (
    Mat,
    SpanTracker,
    inverse,
    kernel_basis,
    rref,
    solve_columns,
    stack_rows,
)
from .rational import Q, ZERO, ONE

Weight = tuple  # integer tuple in epsilon-coordinates


def is_dominant(family: str, coords: Weight) -> bool:
    if any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
        return False
    if family == SP and coords and coords[-1] < 0:
        return False
    return True


@dataclass
class GModule:
    """A g-module: carrier dimension plus one action matrix per basis element.

    weight_bound caps the absolute value of any Cartan eigenvalue on the
    carrier; it makes exact eigenvalue searches finite.
    """

    spec: LieAlgebraSpec
    dim: int
    actions: list
    weight_bound: int
    label: str = ""
    highest_weight: tuple | None = None

    def action_of(self, coords) -> Mat:
        """Action of the element with the given basis coordinates."""
        out = Mat.zeros(self.dim, self.dim)
        for c, a in zip(coords, self.actions):
            if c:
                out = out + a.scale(c)
        return out

    def check_bracket_compatibility(self) -> bool:
        """action([x,y]) == [action(x), action(y)] on all basis pairs."""
        d = self.spec.dim
        for i in range(d):
            for j in range(d):
                lhs = Mat.zeros(self.dim, self.dim)
                for k, c in self.spec.bracket[(i, j)].items():
                    lhs = lhs + self.actions[k].scale(c)
                if lhs != self.actions[i].commutator(self.actions[j]):
                    return False
        return True


@dataclass
class IsotypicComponent:
    mu: Weight
    multiplicity: int
    hwv_basis: Mat  # columns: basis of the highest weight vectors
    component_basis: Mat  # columns spanning the full isotypic component

    @property
    def irrep_dim(self) -> int:
        return self.component_basis.cols // self.multiplicity


def standard_module(spec: LieAlgebraSpec) -> GModule:
    acts = [b.copy() for b in spec.basis]
    hw = (1,) + (0,) * (spec.n - 1) if spec.cartan_indices is not None else None
    return GModule(spec, spec.matrix_size, acts, 1, label="V", highest_weight=hw)


def trivial_module(spec: LieAlgebraSpec) -> GModule:
    one = Mat.zeros(1, 1)
    hw = (0,) * spec.n if spec.cartan_indices is not None else None
    return GModule(spec, 1, [one.copy() for _ in spec.basis], 0, label="1", highest_weight=hw)


def _promote(a: Mat, dims: list, factor: int) -> Mat:
    """1 ⊗ ... ⊗ a ⊗ ... ⊗ 1 in factor-1-major Kronecker index order."""
    pre = 1
    for d in dims[:factor]:
        pre *= d
    post = 1
    for d in dims[factor + 1 :]:
        post *= d
    df = dims[factor]
    total = pre * df * post
    out = Mat.zeros(total, total)
    for r in range(df):
        arow = a.data[r]
        for c in range(df):
            v = arow[c]
            if v:
                for p in range(pre):
                    base_r = (p * df + r) * post
                    base_c = (p * df + c) * post
                    for q in range(post):
                        out.data[base_r + q][base_c + q] = v
    return out


def tensor_module(factors: list) -> GModule:
    """Tensor product with action x ↦ Σ_i 1⊗...⊗action_i(x)⊗...⊗1."""
    if not factors:
        raise ValueError("tensor_module needs at least one factor")
    spec = factors[0].spec
    for f in factors:
        if f.spec is not spec and f.spec != spec:
            raise ValueError("tensor factors over different Lie algebras")
    if len(factors) == 1:
        f = factors[0]
        return GModule(spec, f.dim, [a.copy() for a in f.actions], f.weight_bound, f.label)
    dims = [f.dim for f in factors]
    total = 1
    for d in dims:
        total *= d
    actions = []
    for b in range(spec.dim):
        acc = Mat.zeros(total, total)
        for i, f in enumerate(factors):
            acc = acc + _promote(f.actions[b], dims, i)
        actions.append(acc)
    bound = sum(f.weight_bound for f in factors)
    label = "⊗".join(f.label or "?" for f in factors)
    return GModule(spec, total, actions, bound, label)


def _restrict(action: Mat, basis_cols: Mat) -> Mat:
    """Matrix of an operator on the invariant subspace spanned by the columns."""
    return solve_columns(basis_cols, action * basis_cols)


def _require_weights(spec: LieAlgebraSpec, what: str):
    if spec.cartan_indices is None:
        raise ValueError(f"{what} requires a rational split Cartan (gl/sp only)")


def weight_space(module: GModule, weight: Weight) -> Mat:
    """Column basis of the simultaneous Cartan eigenspace for ``weight``."""
    _require_weights(module.spec, "weight_space")
    cartans = module.spec.cartan_indices
    if len(weight) != len(cartans):
        raise ValueError("weight length does not match Cartan rank")
    ident = Mat.identity(module.dim)
    stacked = stack_rows(
        [module.actions[h] - ident.scale(c) for h, c in zip(cartans, weight)]
    )
    cols = kernel_basis(stacked)
    return Mat.from_columns(cols, module.dim)


def weight_decomposition(module: GModule, basis_cols: Mat | None = None):
    """Split a module (or an invariant subspace of it) into weight spaces.

    Returns a list of (weight, column basis in carrier coordinates).
    Recursively splits by each Cartan element; eigenvalues are integers
    bounded by module.weight_bound, so the search is finite and exact.
    """
    _require_weights(module.spec, "weight_decomposition")
    cartans = module.spec.cartan_indices
    bound = module.weight_bound
    if basis_cols is None:
        basis_cols = Mat.identity(module.dim)

    pieces = [((), basis_cols)]
    for h in cartans:
        action = module.actions[h]
        new_pieces = []
        for wt, cols in pieces:
            restricted = _restrict(action, cols)
            found = 0
            for c in range(-bound, bound + 1):
                shifted = restricted - Mat.identity(restricted.rows).scale(c)
                ker = kernel_basis(shifted)
                if ker:
                    sub = cols * Mat.from_columns(ker, restricted.rows)
                    new_pieces.append((wt + (c,), sub))
                    found += sub.cols
            if found != cols.cols:
                raise ValueError("Cartan action not diagonalizable in bound range")
        pieces = new_pieces
    return pieces


def _lowering_closure(module: GModule, seed_cols: Mat) -> Mat:
    """Close a set of vectors under the lowering actions until stable."""
    lowering = [module.actions[i] for i in module.spec.lowering_indices]
    tracker = SpanTracker(module.dim)
    basis_vectors = []
    frontier = []
    for col in seed_cols.columns():
        if tracker.add(col):
            basis_vectors.append(col)
            frontier.append(col)
    while frontier:
        next_frontier = []
        for v in frontier:
            for low in lowering:
                w = low.apply(v)
                if any(w) and tracker.add(w):
                    basis_vectors.append(w)
                    next_frontier.append(w)
        frontier = next_frontier
    return Mat.from_columns(basis_vectors, module.dim)


def build_irrep(spec: LieAlgebraSpec, lam: Weight, m: int) -> GModule:
    """Construct V(λ) inside the m-th tensor power of the standard module.

    gl(n): λ a partition with |λ| = m.  sp(2n): |λ| <= m with m - |λ| even.
    The highest weight vector is the first kernel vector, in the
    deterministic order produced by rref, of the raising actions restricted
    to the λ weight space; the module is its lowering closure.
    """
    _require_weights(spec, "build_irrep")
    lam = tuple(int(c) for c in lam)
    if not is_dominant(spec.family, lam):
        raise ValueError(f"weight {lam} not dominant for {spec.family}")
    total = sum(lam)
    if spec.family == GL:
        if any(c < 0 for c in lam):
            raise ValueError("gl irreps are built for polynomial weights only")
        if total != m:
            raise ValueError(f"gl weight {lam} needs tensor degree {total}, got {m}")
    elif spec.family == SP:
        if total > m or (m - total) % 2:
            raise ValueError(f"sp weight {lam} not realizable in degree {m}")
    if m == 0:
        return GModule(spec, 1, [Mat.zeros(1, 1) for _ in spec.basis], 0, "V(0)", lam)

    ambient = tensor_module([standard_module(spec)] * m)
    wspace = weight_space(ambient, lam)
    if wspace.cols == 0:
        raise ValueError(f"weight {lam} does not occur in V^(x{m})")
    raised = stack_rows(
        [ambient.actions[r] * wspace for r in spec.raising_indices]
    )
    ker = kernel_basis(raised)
    if not ker:
        raise ValueError(f"no highest weight vector of weight {lam} in V^(x{m})")
    hwv = wspace.apply(ker[0])
    basis_cols = _lowering_closure(ambient, Mat.from_columns([hwv], ambient.dim))
    actions = [_restrict(a, basis_cols) for a in ambient.actions]
    return GModule(spec, basis_cols.cols, actions, m, f"V{lam}", lam)


def isotypic_decompose(module: GModule):
    """Isotypic components with explicit highest-weight-vector bases.

    Components are ordered by highest weight, lexicographically descending.
    """
    _require_weights(module.spec, "isotypic_decompose")
    spec = module.spec
    if module.dim == 0:
        return []
    raising = [module.actions[r] for r in spec.raising_indices]
    if raising:
        ker = kernel_basis(stack_rows(raising))
    else:
        ker = Mat.identity(module.dim).columns()
    hwv_all = Mat.from_columns(ker, module.dim)

    components = []
    covered = 0
    for wt, cols in weight_decomposition(module, hwv_all):
        if not is_dominant(spec.family, wt):
            raise ValueError(f"non-dominant highest weight {wt} found")
        comp_basis = _lowering_closure(module, cols)
        mult = cols.cols
        if comp_basis.cols % mult:
            raise ValueError("component dimension not divisible by multiplicity")
        components.append(IsotypicComponent(wt, mult, cols, comp_basis))
        covered += comp_basis.cols
    if covered != module.dim:
        raise ValueError("isotypic components do not exhaust the module")
    components.sort(key=lambda c: c.mu, reverse=True)
    return components


def casimir_eigenvalue(spec: LieAlgebraSpec, irrep: GModule):
    """The exact scalar by which Σ_i e_i e^i acts on an irreducible module."""
    total = Mat.zeros(irrep.dim, irrep.dim)
    for i, dual in enumerate(spec.dual_basis):
        dual_action = irrep.action_of(spec.coords(dual))
        total = total + irrep.actions[i] * dual_action
    c = total.data[0][0]
    if total != Mat.identity(irrep.dim).scale(c):
        raise ValueError("Casimir operator is not scalar: module is not irreducible")
    return c


# -- commutants -----------------------------------------------------------


def _kernel_combinations(candidates: list, operator: Mat) -> list:
    """Members of span(candidates) commuting with ``operator``.

    candidates are square matrices; returns a new basis of the subspace
    {M in span : [M, operator] = 0}, expressed as matrices again.
    """
    if not candidates:
        return []
    commutators = [k.commutator(operator) for k in candidates]
    size = candidates[0].rows
    rows = []
    for p in range(size):
        for q in range(size):
            row = [c.data[p][q] for c in commutators]
            if any(row):
                rows.append(row)
    if not rows:
        return candidates
    coeff_kernel = kernel_basis(Mat(rows))
    out = []
    for coeffs in coeff_kernel:
        acc = Mat.zeros(size, size)
        for c, k in zip(coeffs, candidates):
            if c:
                acc = acc + k.scale(c)
        out.append(acc)
    return out


def commutant_basis(actions: list, carrier: GModule | None = None) -> list:
    """Basis of {M : [M, A] = 0 for every A in actions}.

    When ``carrier`` has a rational split Cartan, the search is seeded from
    the weight-space block structure (a commuting M preserves every weight
    space), which keeps the linear systems small.  A combined operator is
    intersected first so later intersections run in low dimension.
    """
    if not actions:
        raise ValueError("commutant of an empty action list is everything")
    size = actions[0].rows

    candidates: list[Mat] = []
    if carrier is not None and carrier.spec.cartan_indices is not None:
        pieces = weight_decomposition(carrier)
        cols = []
        for _, piece in pieces:
            cols.extend(piece.columns())
        t = Mat.from_columns(cols, size)
        t_inv = inverse(t)
        transformed = [t_inv * a * t for a in actions]
        offset = 0
        block_sizes = [piece.cols for _, piece in pieces]
        for bs in block_sizes:
            for p in range(offset, offset + bs):
                for q in range(offset, offset + bs):
                    candidates.append(Mat.from_entries(size, size, {(p, q): ONE}))
            offset += bs
        work_actions = transformed
    else:
        for p in range(size):
            for q in range(size):
                candidates.append(Mat.from_entries(size, size, {(p, q): ONE}))
        work_actions = actions
        t = None

    combined = Mat.zeros(size, size)
    for i, a in enumerate(work_actions):
        combined = combined + a.scale(i + 1)
    candidates = _kernel_combinations(candidates, combined)
    for a in work_actions:
        candidates = _kernel_combinations(candidates, a)

    if t is not None:
        candidates = [t * m * t_inv for m in candidates]
    return candidates


def commutant_dimension(module: GModule) -> int:
    """dim {M : [M, action(x)] = 0 for all basis x}."""
    return len(commutant_basis(module.actions, carrier=module))
