"""Explicit invariant tensors from the First Fundamental Theorem.

For gl(n) the spanning family is indexed by permutations of the tensor
slots; for sp(2n) and so(n) by permutations of 2k slots, with paired
indices tied together (antidiagonally with signs in the symplectic case,
equal in the orthogonal case) and each paired factor symmetrized into
sp(2n), resp. antisymmetrized into so(n).  All tensors are expanded into
spec-basis coordinates at construction time so one representation serves
every family.
"""

from __future__ import annotations

import itertools

from .liealg import GL, SO, SP, LieAlgebraSpec, sign_function
from .linalg import Mat
from .currents import InvariantTensor
from .poly import Poly
from .rational import Q, ZERO, ONE


class Permutation:
    """A bijection of {1, ..., k}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def cycle(cls, k: int) -> "Permutation":
        """The k-cycle (1, 2, ..., k)."""
        return cls([i % k + 1 for i in range(1, k + 1)])

    @classmethod
    def transposition(cls, k: int, r: int, s: int) -> "Permutation":
        if not (1 <= r <= k and 1 <= s <= k and r != s):
            raise ValueError(f"invalid transposition ({r}, {s}) in degree {k}")
        images = list(range(1, k + 1))
        images[r - 1], images[s - 1] = s, r
        return cls(images)

    @classmethod
    def from_cycles(cls, k: int, cycles) -> "Permutation":
        images = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= k:
                    raise ValueError(f"cycle entry {a} out of range 1..{k}")
                images[a - 1] = b
        return cls(images)

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition self ∘ other."""
        if self.k != other.k:
            raise ValueError("degree mismatch")
        return Permutation([self(other(i)) for i in range(1, self.k + 1)])

    def inverse(self) -> "Permutation":
        images = [0] * self.k
        for i, img in enumerate(self.images, start=1):
            images[img - 1] = i
        return Permutation(images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def all_permutations(k: int):
    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)


def casimir_tensor(spec: LieAlgebraSpec) -> InvariantTensor:
    """Ω = Σ_i e_i ⊗ e^i, expanded in basis coordinates."""
    acc: dict = {}
    for i, dual in enumerate(spec.dual_basis):
        for j, c in enumerate(spec.coords(dual)):
            if c:
                key = (i, j)
                acc[key] = acc.get(key, ZERO) + c
    return InvariantTensor.from_dict(2, acc)


def _gl_index(n: int, i: int, j: int) -> int:
    return (i - 1) * n + (j - 1)


def theta_sigma_gl(sigma: Permutation, n: int) -> InvariantTensor:
    """Σ over i_1..i_k of E_{i_1, i_σ(1)} ⊗ ... ⊗ E_{i_k, i_σ(k)}."""
    k = sigma.k
    acc: dict = {}
    for idx in itertools.product(range(1, n + 1), repeat=k):
        key = tuple(
            _gl_index(n, idx[j - 1], idx[sigma(j) - 1]) for j in range(1, k + 1)
        )
        acc[key] = acc.get(key, ZERO) + ONE
    return InvariantTensor.from_dict(k, acc)


def theta_cycle_gl(k: int, n: int) -> InvariantTensor:
    """θ for the distinguished cycle (1, 2, ..., k)."""
    if k < 1:
        raise ValueError("cycle degree must be >= 1")
    return theta_sigma_gl(Permutation.cycle(k), n)


def _expand_factors(spec: LieAlgebraSpec, prefactor, factor_coords, acc: dict):
    """Multilinear expansion of prefactor · f_1 ⊗ ... ⊗ f_k into acc."""
    choices = [(prefactor, ())]
    for coords in factor_coords:
        nxt = []
        for c, key in choices:
            for b, cb in coords:
                nxt.append((c * cb, key + (b,)))
        choices = nxt
    for c, key in choices:
        acc[key] = acc.get(key, ZERO) + c


def _sparse_coords(spec: LieAlgebraSpec, m: Mat):
    return [(b, c) for b, c in enumerate(spec.coords(m)) if c]


def theta_sigma_sp(sigma: Permutation, n: int, spec: LieAlgebraSpec | None = None):
    """The symmetrized symplectic FFT tensor for σ ∈ Σ_{2k}.

    Free indices run over the odd slots; each even slot holds the
    antidiagonal mirror of its predecessor, contributing the sign s of the
    free index (the mirrored basis vector carries that sign).  Each of the
    k paired factors is symmetrized into sp(2n) via the form, giving
    (1/2)(s(b) E_{a, 2n+1-b} + s(a) E_{b, 2n+1-a}) for slot values (a, b);
    factors are verified to lie in sp(2n) during coordinate expansion.
    """
    if sigma.k % 2:
        raise ValueError("symplectic tensors need a permutation of even degree")
    k = sigma.k // 2
    if spec is None:
        from .liealg import build_lie_algebra

        spec = build_lie_algebra(SP, n)
    N = 2 * n
    half = Q(1, 2)
    factor_cache: dict = {}

    def factor(a: int, b: int):
        key = (a, b)
        got = factor_cache.get(key)
        if got is None:
            m = Mat.zeros(N, N)
            m.data[a - 1][N - b] += half * sign_function(n, b)
            m.data[b - 1][N - a] += half * sign_function(n, a)
            got = _sparse_coords(spec, m)
            factor_cache[key] = got
        return got

    acc: dict = {}
    for free in itertools.product(range(1, N + 1), repeat=k):
        slots = [0] * (2 * k + 1)
        coeff = ONE
        for j, v in enumerate(free, start=1):
            slots[2 * j - 1] = v
            slots[2 * j] = N + 1 - v
            coeff *= sign_function(n, v)
        coords = [
            factor(slots[sigma(2 * j - 1)], slots[sigma(2 * j)])
            for j in range(1, k + 1)
        ]
        _expand_factors(spec, coeff, coords, acc)
    return InvariantTensor.from_dict(k, acc)


def psi_sigma_so(sigma: Permutation, n: int, spec: LieAlgebraSpec | None = None):
    """The antisymmetrized orthogonal FFT tensor for σ ∈ Σ_{2k}.

    Free indices run over the odd slots with each even slot equal to its
    predecessor; paired factors antisymmetrize to -(1/2)(E_ab - E_ba).
    """
    if sigma.k % 2:
        raise ValueError("orthogonal tensors need a permutation of even degree")
    k = sigma.k // 2
    if spec is None:
        from .liealg import build_lie_algebra

        spec = build_lie_algebra(SO, n)

    so_index = {}
    pos = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            so_index[(i, j)] = pos
            pos += 1

    def factor(a: int, b: int):
        # -(1/2)(E_ab - E_ba) in the {E_ij - E_ji : i < j} basis
        if a == b:
            return []
        if a < b:
            return [(so_index[(a, b)], Q(-1, 2))]
        return [(so_index[(b, a)], Q(1, 2))]

    acc: dict = {}
    for free in itertools.product(range(1, n + 1), repeat=k):
        slots = [0] * (2 * k + 1)
        for j, v in enumerate(free, start=1):
            slots[2 * j - 1] = v
            slots[2 * j] = v
        coords = [
            factor(slots[sigma(2 * j - 1)], slots[sigma(2 * j)])
            for j in range(1, k + 1)
        ]
        _expand_factors(spec, ONE, coords, acc)
    return InvariantTensor.from_dict(k, acc)


def fft_tensors(spec: LieAlgebraSpec, k: int):
    """All FFT spanning tensors of degree k for the given family."""
    if spec.family == GL:
        return [theta_sigma_gl(s, spec.n) for s in all_permutations(k)]
    if spec.family == SP:
        return [theta_sigma_sp(s, spec.n, spec) for s in all_permutations(2 * k)]
    if spec.family == SO:
        return [psi_sigma_so(s, spec.n, spec) for s in all_permutations(2 * k)]
    raise ValueError(f"unknown family {spec.family!r}")


def schur_weyl_polys(tau, points, k: int):
    """The Lagrange-style pair (P_τ, Q_τ) attached to a transposition.

    P_τ = (t - p_r + 1) Π_{d≠r} (t - p_d)/(p_r - p_d), and Q_τ the same
    with s in place of r.  Each has degree k and P_τ(p_d) = δ_{dr},
    Q_τ(p_d) = δ_{ds}.
    """
    r, s = tau
    if not (1 <= r < s <= k):
        raise ValueError(f"transposition indices must satisfy 1 <= r < s <= k, got {tau}")
    pts = [Q(p) for p in points]
    if len(pts) != k:
        raise ValueError(f"need {k} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")

    def build(target: int) -> Poly:
        p_t = pts[target - 1]
        out = Poly([1 - p_t, 1])  # (t - p_target + 1)
        for d, p_d in enumerate(pts, start=1):
            if d != target:
                out = out * Poly([-p_d, 1]).scale(Q(1) / (p_t - p_d))
        return out

    return build(r), build(s)
