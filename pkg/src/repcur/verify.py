"""Executable checks: every claimed identity becomes an exact pass/fail.

Each check returns a CheckReport whose status depends only on rational
equalities and dimension counts; there are no tolerances anywhere.
Negative controls (a non-invariant probe tensor, coincident evaluation
points) are first-class so that sign-convention drift fails loudly.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .currents import (
    EvaluationModule,
    InvariantTensor,
    invariant_operator_matrix,
)
from .invariants import (
    Permutation,
    all_permutations,
    casimir_tensor,
    fft_tensors,
    schur_weyl_polys,
    theta_cycle_gl,
    theta_sigma_gl,
)
from .liealg import GL, SO, SP, LieAlgebraSpec, build_lie_algebra
from .linalg import Mat, SpanTracker, algebra_closure, solve_columns
from .modules import (
    GModule,
    build_irrep,
    casimir_eigenvalue,
    commutant_basis,
    commutant_dimension,
    isotypic_decompose,
    standard_module,
)
from .poly import Poly
from .rational import Q, ZERO


@dataclass
class CheckReport:
    check_name: str
    parameters: dict
    status: str  # "pass" | "fail"
    expected: str
    actual: str
    runtime_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _report(name, params, passed, expected, actual, t0) -> CheckReport:
    return CheckReport(
        check_name=name,
        parameters=params,
        status="pass" if passed else "fail",
        expected=str(expected),
        actual=str(actual),
        runtime_ms=int((time.monotonic() - t0) * 1000),
    )


# -- Lemma-level checks ---------------------------------------------------


def ad_invariance_defect(theta: InvariantTensor, spec: LieAlgebraSpec):
    """First basis element whose adjoint action fails to kill theta, or None."""
    for y in range(spec.dim):
        acc: dict = {}
        for c, idx in theta.terms:
            for pos, b in enumerate(idx):
                for bnew, cb in spec.bracket[(y, b)].items():
                    key = idx[:pos] + (bnew,) + idx[pos + 1 :]
                    acc[key] = acc.get(key, ZERO) + c * cb
        if any(acc.values()):
            return y
    return None


def check_ad_invariance(theta: InvariantTensor, spec: LieAlgebraSpec, params=None):
    t0 = time.monotonic()
    params = dict(params or {})
    params.setdefault("family", spec.family)
    params.setdefault("n", spec.n)
    params.setdefault("k", theta.k)
    defect = ad_invariance_defect(theta, spec)
    return _report(
        "ad_invariance",
        params,
        defect is None,
        "[y, theta] = 0 for every basis y",
        "holds" if defect is None else f"nonzero against basis element {defect}",
        t0,
    )


def check_commutant(theta: InvariantTensor, polys, em: EvaluationModule, params=None):
    """[g, theta(P_1, ..., P_k)] = 0 on the evaluation module."""
    t0 = time.monotonic()
    params = dict(params or {})
    params.setdefault("family", em.spec.family)
    params.setdefault("n", em.spec.n)
    params.setdefault("k", theta.k)
    params.setdefault("points", [str(p) for p in em.points])
    op = invariant_operator_matrix(theta, list(polys), em)
    one = Poly.constant(1)
    bad = None
    for y in range(em.spec.dim):
        if not em.basis_action(y, one).commutator(op).is_zero():
            bad = y
            break
    return _report(
        "commutant",
        params,
        bad is None,
        "operator commutes with every basis action",
        "commutes" if bad is None else f"nonzero commutator with basis element {bad}",
        t0,
    )


# -- Casimir ---------------------------------------------------------------


def casimir_scalar(spec: LieAlgebraSpec, mu, _cache={}):
    """C_mu: the scalar of the Casimir on V(mu), via an independent build."""
    key = (spec.family, spec.n, tuple(mu))
    if key not in _cache:
        _cache[key] = casimir_eigenvalue(spec, build_irrep(spec, mu, sum(mu)))
    return _cache[key]


def check_casimir_formula(em: EvaluationModule, p: Poly, q: Poly, params=None):
    """Omega(P, Q) acts on each isotypic component W[mu] by the two-point
    scalar w1 z1 C_{l1} + w2 z2 C_{l2} + (w1 z2 + w2 z1)/2 (C_mu - C_{l1} - C_{l2})."""
    t0 = time.monotonic()
    if em.d != 2:
        raise ValueError("the two-point Casimir formula needs exactly two factors")
    if not em.has_distinct_points():
        raise ValueError("points must be distinct")
    lams = [f.highest_weight for f in em.factors]
    if any(l is None for l in lams):
        raise ValueError("factors must carry highest weights")
    spec = em.spec
    params = dict(params or {})
    params.setdefault("family", spec.family)
    params.setdefault("n", spec.n)
    params.setdefault("weights", [str(l) for l in lams])
    params.setdefault("points", [str(pt) for pt in em.points])
    params.setdefault("P", list(map(str, p.coeffs)))
    params.setdefault("Q", list(map(str, q.coeffs)))

    w1, w2 = p(em.points[0]), p(em.points[1])
    z1, z2 = q(em.points[0]), q(em.points[1])
    c1 = casimir_scalar(spec, lams[0])
    c2 = casimir_scalar(spec, lams[1])
    op = invariant_operator_matrix(casimir_tensor(spec), [p, q], em)

    observed = []
    ok = True
    for comp in isotypic_decompose(em.carrier):
        cmu = casimir_scalar(spec, comp.mu)
        scalar = w1 * z1 * c1 + w2 * z2 * c2 + Q(w1 * z2 + w2 * z1, 2) * (
            cmu - c1 - c2
        )
        basis = comp.component_basis
        if op * basis != basis.scale(scalar):
            ok = False
        observed.append(f"mu={comp.mu}: {scalar}")
    return _report(
        "casimir_formula",
        params,
        ok,
        "; ".join(observed),
        "; ".join(observed) if ok else "operator deviates from the scalar",
        t0,
    )


# -- Schur-Weyl -----------------------------------------------------------


def place_permutation_matrix(perm: Permutation, n: int, k: int) -> Mat:
    """The place-permutation action on the k-th tensor power of C^n."""
    dim = n**k
    out = Mat.zeros(dim, dim)
    inv = perm.inverse()
    for idx in itertools.product(range(n), repeat=k):
        tgt = tuple(idx[inv(j) - 1] for j in range(1, k + 1))
        r = 0
        for t in tgt:
            r = r * n + t
        c = 0
        for t in idx:
            c = c * n + t
        out.data[r][c] = Q(1)
    return out


def transposition_preimage_matrix(tau, points, n: int, em: EvaluationModule) -> Mat:
    """Matrix of Sum_ij E_ij(P_tau) E_ji(Q_tau) on the evaluation module."""
    k = len(points)
    p_tau, q_tau = schur_weyl_polys(tau, points, k)
    swap_tensor = theta_sigma_gl(Permutation((2, 1)), n)
    return invariant_operator_matrix(swap_tensor, [p_tau, q_tau], em)


def check_schur_weyl(tau, n: int, k: int, points, params=None):
    t0 = time.monotonic()
    pts = [Q(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    spec = build_lie_algebra(GL, n)
    em = EvaluationModule([standard_module(spec)] * k, pts)
    params = dict(params or {})
    params.update({"n": n, "k": k, "tau": list(tau), "points": [str(p) for p in pts]})
    got = transposition_preimage_matrix(tau, pts, n, em)
    want = place_permutation_matrix(Permutation.transposition(k, *tau), n, k)
    return _report(
        "schur_weyl",
        params,
        got == want,
        f"place permutation matrix of {tuple(tau)}",
        "matches entrywise" if got == want else "differs",
        t0,
    )


def check_schur_weyl_composition(n: int, k: int, points, params=None):
    """Products of transposition preimages equal preimages of the products."""
    t0 = time.monotonic()
    pts = [Q(p) for p in points]
    spec = build_lie_algebra(GL, n)
    em = EvaluationModule([standard_module(spec)] * k, pts)
    taus = [(r, s) for r in range(1, k + 1) for s in range(r + 1, k + 1)]
    images = {
        tau: transposition_preimage_matrix(tau, pts, n, em) for tau in taus
    }
    ok = True
    for t1 in taus:
        for t2 in taus:
            composed = Permutation.transposition(k, *t1) * Permutation.transposition(
                k, *t2
            )
            if images[t1] * images[t2] != place_permutation_matrix(composed, n, k):
                ok = False
    params = dict(params or {})
    params.update({"n": n, "k": k, "points": [str(p) for p in pts]})
    return _report(
        "schur_weyl_composition",
        params,
        ok,
        "preimage products realize composed permutations",
        "holds" if ok else "violated",
        t0,
    )


# -- spanning / irreducibility --------------------------------------------


def _default_cap(em: EvaluationModule, degree_cap) -> int:
    return em.d - 1 if degree_cap is None else int(degree_cap)


def _distinct_tensors(spec: LieAlgebraSpec, k: int):
    """FFT tensors of degree k, deduplicated up to nonzero scalar."""
    seen = set()
    out = []
    for th in fft_tensors(spec, k):
        if th.is_zero():
            continue
        key = th.canonical_key()
        if key in seen:
            continue
        seen.add(key)
        out.append(th)
    return out


def fft_current_images(em: EvaluationModule, degree_cap: int, max_tensor_degree=None):
    """Matrices of theta(t^{n_1}, ..., t^{n_k}) over the FFT generators.

    Enumerates tensor degrees k = 1..max_tensor_degree (default: the number
    of factors) and all unsorted degree tuples bounded by degree_cap.
    """
    kmax = em.d if max_tensor_degree is None else max_tensor_degree
    for k in range(1, kmax + 1):
        for th in _distinct_tensors(em.spec, k):
            for degs in itertools.product(range(degree_cap + 1), repeat=k):
                polys = [Poly.monomial(m) for m in degs]
                yield invariant_operator_matrix(th, polys, em)


def check_span_surjectivity(
    em: EvaluationModule, degree_cap=None, include_products=True, params=None
):
    """Images of the FFT currents span the full g-commutant of the module.

    The direct enumeration stops at tensor degree d (number of factors);
    when that span falls short, one round of pairwise products is added.
    Products of current images are themselves current images, of the
    decomposable invariant tensors of twice the degree, so the extended set
    still consists of FFT-current images only.
    """
    t0 = time.monotonic()
    cap = _default_cap(em, degree_cap)
    if not em.has_distinct_points():
        raise ValueError("span check requires pairwise distinct points")
    expected = commutant_dimension(em.carrier)
    tracker = SpanTracker(em.dim * em.dim)
    tracker.add(Mat.identity(em.dim).flat())
    images = [Mat.identity(em.dim)]
    for img in fft_current_images(em, cap):
        if tracker.add(img.flat()):
            # products of a spanning subset reach every pairwise product,
            # so only span-enlarging images need to be retained
            images.append(img)
    direct = tracker.dim
    if direct < expected and include_products:
        for a in list(images):
            for b in list(images):
                tracker.add((a * b).flat())
    actual = tracker.dim
    params = dict(params or {})
    params.update(
        {
            "family": em.spec.family,
            "n": em.spec.n,
            "d": em.d,
            "points": [str(p) for p in em.points],
            "degree_cap": cap,
            "direct_span": direct,
            "product_extended": actual != direct,
        }
    )
    return _report("span_surjectivity", params, actual == expected, expected, actual, t0)


def _restricted_generators(em: EvaluationModule, hwv_basis: Mat, cap: int):
    """Current images compressed to the highest-weight-vector block."""
    gens = []
    for img in fft_current_images(em, cap):
        gens.append(solve_columns(hwv_basis, img * hwv_basis))
    return gens


def check_isotypic_irreducibility(em: EvaluationModule, degree_cap=None, params=None):
    """Burnside criterion on every multiplicity space: the restricted
    current images must generate the full multiplicity x multiplicity
    matrix algebra."""
    t0 = time.monotonic()
    cap = _default_cap(em, degree_cap)
    params = dict(params or {})
    params.update(
        {
            "family": em.spec.family,
            "n": em.spec.n,
            "points": [str(p) for p in em.points],
            "degree_cap": cap,
            "distinct_points": em.has_distinct_points(),
        }
    )
    expected_bits = []
    actual_bits = []
    ok = True
    for comp in isotypic_decompose(em.carrier):
        gens = _restricted_generators(em, comp.hwv_basis, cap)
        closure_dim = len(algebra_closure(gens, comp.multiplicity))
        want = comp.multiplicity**2
        expected_bits.append(f"mu={comp.mu}: {want}")
        actual_bits.append(f"mu={comp.mu}: {closure_dim}")
        if closure_dim != want:
            ok = False
    return _report(
        "isotypic_irreducibility",
        params,
        ok,
        "; ".join(expected_bits),
        "; ".join(actual_bits),
        t0,
    )


def check_cycle_generation(em: EvaluationModule, degree_cap=None, params=None):
    """The cycle currents alone generate the commutant algebra (gl only).

    Also records, informationally, the closure dimension when the degree
    tuples are restricted to weakly increasing ones.
    """
    t0 = time.monotonic()
    if em.spec.family != GL:
        raise ValueError("cycle generation is a gl-family check")
    cap = _default_cap(em, degree_cap)
    if not em.has_distinct_points():
        raise ValueError("cycle generation requires pairwise distinct points")
    expected = commutant_dimension(em.carrier)

    def closure_dim(sorted_only: bool) -> int:
        gens = []
        for j in range(1, em.d + 1):
            th = theta_cycle_gl(j, em.spec.n)
            for degs in itertools.product(range(cap + 1), repeat=j):
                if sorted_only and list(degs) != sorted(degs):
                    continue
                polys = [Poly.monomial(m) for m in degs]
                gens.append(invariant_operator_matrix(th, polys, em))
        return len(algebra_closure(gens, em.dim))

    actual = closure_dim(sorted_only=False)
    params = dict(params or {})
    params.update(
        {
            "n": em.spec.n,
            "d": em.d,
            "points": [str(p) for p in em.points],
            "degree_cap": cap,
            "sorted_tuple_closure_dim": closure_dim(sorted_only=True),
        }
    )
    return _report("cycle_generation", params, actual == expected, expected, actual, t0)


def evaluation_commutant_dimension(em: EvaluationModule, degree_cap=None) -> int:
    """dim of the commutant of the full g[t]-action (degrees up to the cap)."""
    cap = _default_cap(em, degree_cap)
    actions = [
        em.basis_action(b, Poly.monomial(m))
        for b in range(em.spec.dim)
        for m in range(cap + 1)
    ]
    carrier = em.carrier if em.spec.cartan_indices is not None else None
    return len(commutant_basis(actions, carrier=carrier))


def check_evaluation_irreducibility(em: EvaluationModule, degree_cap=None, params=None):
    """Distinct points make the evaluation module irreducible over g[t]
    (commutant dimension one, by Schur)."""
    t0 = time.monotonic()
    actual = evaluation_commutant_dimension(em, degree_cap)
    params = dict(params or {})
    params.update(
        {
            "family": em.spec.family,
            "n": em.spec.n,
            "d": em.d,
            "points": [str(p) for p in em.points],
            "distinct_points": em.has_distinct_points(),
        }
    )
    return _report("evaluation_irreducibility", params, actual == 1, 1, actual, t0)


# -- full acceptance sweep ------------------------------------------------


def _negated(report: CheckReport, label: str) -> CheckReport:
    """Wrap a negative control: the wrapped check is expected to fail."""
    return CheckReport(
        check_name=f"{report.check_name}_control",
        parameters={**report.parameters, "control": label},
        status="pass" if report.status == "fail" else "fail",
        expected=f"underlying check fails ({label})",
        actual=f"underlying check reported {report.status}",
        runtime_ms=report.runtime_ms,
    )


def _random_poly(rng: random.Random, max_degree: int) -> Poly:
    coeffs = [Q(rng.randint(-3, 3)) for _ in range(max_degree + 1)]
    coeffs[-1] = Q(rng.choice([1, 2, -1]))  # keep the degree honest
    return Poly(coeffs)


def run_acceptance_suite(seed: int = 0, profile: str = "desk"):
    """All checks, across families and sizes, tagged by criterion.

    profile "desk" covers the full size grid; "quick" shrinks it to the
    smallest instances (used, twice, by the determinism test).
    """
    if profile not in ("desk", "quick"):
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(seed)
    full = profile == "desk"
    reports: list[CheckReport] = []

    def add(criterion: str, report: CheckReport):
        report.parameters["criterion"] = criterion
        reports.append(report)

    specs = {
        (GL, 2): build_lie_algebra(GL, 2),
        (SP, 1): build_lie_algebra(SP, 1),
        (SO, 3): build_lie_algebra(SO, 3),
    }
    if full:
        specs[(GL, 3)] = build_lie_algebra(GL, 3)
        specs[(SO, 4)] = build_lie_algebra(SO, 4)

    # 1. ad-invariance of every FFT tensor (and the Casimir), plus a
    #    deliberately non-invariant probe that must be flagged.
    ad_grid = [(GL, 2, 3), (SP, 1, 2), (SO, 3, 2)]
    if full:
        ad_grid += [(GL, 3, 3), (SO, 4, 2)]
    for fam, n, kmax in ad_grid:
        spec = specs[(fam, n)]
        add("ad_invariance", check_ad_invariance(casimir_tensor(spec), spec))
        for k in range(1, kmax + 1):
            bad = None
            t0 = time.monotonic()
            count = 0
            for th in fft_tensors(spec, k):
                if th.is_zero():
                    continue
                count += 1
                d = ad_invariance_defect(th, spec)
                if d is not None:
                    bad = d
                    break
            add(
                "ad_invariance",
                _report(
                    "ad_invariance_family",
                    {"family": fam, "n": n, "k": k, "tensors": count},
                    bad is None,
                    "all FFT tensors annihilated by the adjoint action",
                    "holds" if bad is None else f"defect at basis {bad}",
                    t0,
                ),
            )
    probe = InvariantTensor.from_dict(2, {(1, 1): Q(1)})  # E_12 (x) E_12 in gl(2)
    add(
        "ad_invariance",
        _negated(check_ad_invariance(probe, specs[(GL, 2)]), "non-invariant probe"),
    )

    # 2. commutation of current operators with the algebra action.
    for fam, n in ([(GL, 2), (SP, 1), (SO, 3)] + ([(GL, 3)] if full else [])):
        spec = specs[(fam, n)]
        V = standard_module(spec)
        em = EvaluationModule([V, V], [Q(0), Q(1)])
        polys = [_random_poly(rng, 1), _random_poly(rng, 1)]
        add("commutant", check_commutant(casimir_tensor(spec), polys, em))
        k = 2 if fam == GL else 1
        for th in fft_tensors(spec, k)[: 3 if full else 1]:
            if th.is_zero():
                continue
            add(
                "commutant",
                check_commutant(th, [_random_poly(rng, 2) for _ in range(th.k)], em),
            )

    # 3. the two-point Casimir eigenvalue formula, on standard and
    #    non-standard factors, with random polynomial pairs.
    for fam, n in [(GL, 2), (SP, 1)]:
        spec = specs[(fam, n)]
        V = standard_module(spec)
        em = EvaluationModule([V, V], [Q(0), Q(1)])
        add(
            "casimir_formula",
            check_casimir_formula(em, _random_poly(rng, 2), _random_poly(rng, 2)),
        )
    if full:
        spec = specs[(GL, 2)]
        W = build_irrep(spec, (2, 0), 2)
        em = EvaluationModule(
            [W, standard_module(spec)], [Q(1, 2), Q(-2)]
        )
        add(
            "casimir_formula",
            check_casimir_formula(em, _random_poly(rng, 2), _random_poly(rng, 2)),
        )

    # 4. Schur-Weyl transposition preimages, including composition.
    sw_grid = [(2, 2), (2, 3)] + ([(3, 2), (3, 3)] if full else [])
    for n, k in sw_grid:
        pts = [Q(i) for i in range(k)]
        for r in range(1, k + 1):
            for s in range(r + 1, k + 1):
                add("schur_weyl", check_schur_weyl((r, s), n, k, pts))
        add("schur_weyl", check_schur_weyl_composition(n, k, pts))
    add(
        "schur_weyl",
        check_schur_weyl((1, 2), 2, 3, [Q(0), Q(1, 2), Q(7, 3)]),
    )

    # 5. the current images span the commutant of the g-action.
    span_grid = [(GL, 2, 2), (SP, 1, 2), (SO, 3, 2)]
    if full:
        span_grid += [(GL, 2, 3), (GL, 3, 3)]
    for fam, n, d in span_grid:
        spec = specs[(fam, n)]
        V = standard_module(spec)
        em = EvaluationModule([V] * d, [Q(i) for i in range(d)])
        add("span_surjectivity", check_span_surjectivity(em))

    # 6. Burnside irreducibility on every isotypic multiplicity space.
    iso_grid = [(GL, 2, 3)]
    if full:
        iso_grid += [(SP, 1, 2)]
    for fam, n, d in iso_grid:
        spec = specs[(fam, n)]
        V = standard_module(spec)
        em = EvaluationModule([V] * d, [Q(i) for i in range(d)])
        add("isotypic_irreducibility", check_isotypic_irreducibility(em))
    spec = specs[(GL, 2)]
    V = standard_module(spec)
    add(
        "isotypic_irreducibility",
        _negated(
            check_isotypic_irreducibility(
                EvaluationModule([V] * 3, [Q(0), Q(0), Q(0)])
            ),
            "coincident points",
        ),
    )
    if full:
        W = build_irrep(spec, (2, 0), 2)
        em = EvaluationModule([W, V, V], [Q(0), Q(1), Q(2)])
        add("isotypic_irreducibility", check_isotypic_irreducibility(em))

    # 7. the cycle currents alone generate the commutant algebra.
    cyc_grid = [(2, 2)] + ([(2, 3)] if full else [])
    for n, d in cyc_grid:
        spec = specs[(GL, n)]
        V = standard_module(spec)
        em = EvaluationModule([V] * d, [Q(i) for i in range(d)])
        add("cycle_generation", check_cycle_generation(em))

    # 8. evaluation modules at distinct points are irreducible over g[t];
    #    coincident points break this (negative control).
    ev_grid = [(GL, 2, 2), (GL, 2, 3), (SP, 1, 2)]
    if full:
        ev_grid += [(GL, 3, 3), (SO, 3, 2)]
    for fam, n, d in ev_grid:
        spec = specs[(fam, n)]
        V = standard_module(spec)
        em = EvaluationModule([V] * d, [Q(i) for i in range(d)])
        add("evaluation_irreducibility", check_evaluation_irreducibility(em))
    spec = specs[(GL, 2)]
    V = standard_module(spec)
    add(
        "evaluation_irreducibility",
        _negated(
            check_evaluation_irreducibility(
                EvaluationModule([V] * 3, [Q(0), Q(0), Q(0)])
            ),
            "coincident points",
        ),
    )

    return reports
