"""Command-line front end: run any verification check and emit JSON.

Exit status is 0 when every requested check passes, 1 when any fails, and
2 on usage errors.  --expect-fail inverts the 0/1 outcome for negative
controls.  All numeric output is exact; rationals are rendered as "a/b"
strings.
"""

from __future__ import annotations

import dataclasses
import json
import os
import sys

import click

from . import verify
from .currents import EvaluationModule
from .invariants import Permutation, casimir_tensor, fft_tensors
from .liealg import FAMILIES, GL, SO, SP, build_lie_algebra
from .modules import build_irrep, is_dominant, standard_module
from .poly import Poly
from .rational import parse_rat


MAX_DIM_ENV = "REPCUR_MAX_DIM"
DEFAULT_MAX_DIM = 4096


def _max_dim() -> int:
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(f"{MAX_DIM_ENV} must be an integer, got {raw!r}")


def parse_points(text: str):
    """Comma-separated rationals, e.g. "0,1,3/2"."""
    try:
        return [parse_rat(tok.strip()) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise click.UsageError(str(exc))


def parse_weights(text: str, n: int, family: str = GL):
    """Semicolon-separated weights, each a comma list: "2,0;1,0"."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            lam = tuple(int(tok) for tok in chunk.split(","))
        except ValueError:
            raise click.UsageError(f"weight entries must be integers: {chunk!r}")
        if len(lam) != n:
            raise click.UsageError(f"weight {lam} needs exactly {n} entries")
        if not is_dominant(family, lam):
            raise click.UsageError(f"weight not dominant: {lam}")
        out.append(lam)
    if not out:
        raise click.UsageError("no weights given")
    return out


def parse_transposition(text: str, k: int):
    """Either "r,s" or cycle notation "(r s)"."""
    text = text.strip()
    if text.startswith("("):
        body = text.strip("()").replace(",", " ")
        parts = body.split()
    else:
        parts = [p.strip() for p in text.split(",")]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise click.UsageError(f"cannot parse transposition {text!r}")
    if len(vals) != 2:
        raise click.UsageError("a transposition needs exactly two indices")
    r, s = sorted(vals)
    if not (1 <= r < s <= k):
        raise click.UsageError(
            f"transposition indices must satisfy 1 <= r < s <= {k}, got {text!r}"
        )
    return (r, s)


def _resolve_cap(degree_cap: str, d: int):
    if degree_cap == "auto":
        # degree d-1 loses nothing: on d distinct points every polynomial
        # agrees with its Lagrange interpolant of degree < d
        return d - 1
    try:
        cap = int(degree_cap)
    except ValueError:
        raise click.UsageError(f'--degree-cap must be "auto" or an integer')
    if cap < 0:
        raise click.UsageError("--degree-cap must be non-negative")
    return cap


def _build_module(family: str, n: int, weights, points) -> EvaluationModule:
    spec = build_lie_algebra(family, n)
    factors = []
    std_weight = (1,) + (0,) * (n - 1)
    for lam in weights:
        if lam == std_weight and family in (GL, SP):
            factors.append(standard_module(spec))
        elif family == SO:
            if lam != std_weight:
                raise click.UsageError(
                    "only the standard module is supported for the so family"
                )
            factors.append(standard_module(spec))
        else:
            factors.append(build_irrep(spec, lam, sum(lam)))
    dim = 1
    for f in factors:
        dim *= f.dim
    limit = _max_dim()
    if dim > limit:
        raise click.UsageError(
            f"carrier dimension {dim} exceeds the limit {limit} "
            f"(raise {MAX_DIM_ENV} to override)"
        )
    return EvaluationModule(factors, points)


def _emit(reports, config, output):
    payload = {
        "version": 1,
        "config": config,
        "checks": [dataclasses.asdict(r) for r in reports],
    }
    text = json.dumps(payload, indent=2, default=str)
    if output in (None, "-"):
        click.echo(text)
    else:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    return all(r.passed for r in reports)


def _finish(ok: bool, expect_fail: bool):
    if expect_fail:
        ok = not ok
    sys.exit(0 if ok else 1)


def _family_option(f):
    return click.option(
        "--family",
        type=click.Choice(FAMILIES),
        default=GL,
        show_default=True,
        help="Lie algebra family.",
    )(f)


_common = [
    click.option("--output", "-o", default=None, help="Write JSON here ('-' = stdout)."),
    click.option(
        "--expect-fail",
        is_flag=True,
        help="Invert the exit status (for negative controls).",
    ),
]


def _with_common(f):
    for opt in _common:
        f = opt(f)
    return f


@click.group()
def main():
    """Exact verification of current-algebra evaluation modules."""


@main.group()
def verify_group():
    """Run a verification check."""


main.add_command(verify_group, name="verify")


@verify_group.command("ad-invariance")
@_family_option
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--degree", "-k", type=int, default=2, show_default=True)
@_with_common
def ad_invariance_cmd(family, n, degree, output, expect_fail):
    """Adjoint invariance of every FFT tensor of the given degree."""
    spec = build_lie_algebra(family, n)
    reports = [verify.check_ad_invariance(casimir_tensor(spec), spec)]
    for th in fft_tensors(spec, degree):
        if not th.is_zero():
            reports.append(verify.check_ad_invariance(th, spec))
    ok = _emit(reports, {"command": "ad-invariance", "family": family, "n": n,
                         "degree": degree}, output)
    _finish(ok, expect_fail)


@verify_group.command("commutant")
@_family_option
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--points", default="0,1", show_default=True)
@click.option("--polys", default="0,1;1,1", show_default=True,
              help="Coefficient lists (ascending), ';'-separated per slot.")
@_with_common
def commutant_cmd(family, n, points, polys, output, expect_fail):
    """The Casimir current commutes with the algebra action."""
    pts = parse_points(points)
    em = _build_module(family, n, [(1,) + (0,) * (n - 1)] * len(pts), pts)
    ps = []
    for chunk in polys.split(";"):
        ps.append(Poly([parse_rat(t.strip()) for t in chunk.split(",")]))
    if len(ps) != 2:
        raise click.UsageError("the Casimir current takes exactly two polynomials")
    reports = [verify.check_commutant(casimir_tensor(em.spec), ps, em)]
    ok = _emit(reports, {"command": "commutant", "family": family, "n": n,
                         "points": points, "polys": polys}, output)
    _finish(ok, expect_fail)


@verify_group.command("casimir")
@_family_option
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--weights", default=None, help='E.g. "2,0;1,0"; default: standard twice.')
@click.option("--points", default="0,1", show_default=True)
@click.option("--polys", default="0,1;1,1", show_default=True)
@_with_common
def casimir_cmd(family, n, weights, points, polys, output, expect_fail):
    """Two-point Casimir eigenvalues on each isotypic component."""
    if family == SO:
        raise click.UsageError("the casimir check needs a split Cartan (gl or sp)")
    pts = parse_points(points)
    if len(pts) != 2:
        raise click.UsageError("the casimir check takes exactly two points")
    if len(set(pts)) != len(pts):
        raise click.UsageError("points must be pairwise distinct")
    if weights is None:
        lam = [(1,) + (0,) * (n - 1)] * 2
    else:
        lam = parse_weights(weights, n, family)
    if len(lam) != 2:
        raise click.UsageError("the casimir check takes exactly two weights")
    em = _build_module(family, n, lam, pts)
    ps = [Poly([parse_rat(t.strip()) for t in chunk.split(",")])
          for chunk in polys.split(";")]
    if len(ps) != 2:
        raise click.UsageError("the casimir check takes exactly two polynomials")
    reports = [verify.check_casimir_formula(em, ps[0], ps[1])]
    ok = _emit(reports, {"command": "casimir", "family": family, "n": n,
                         "weights": weights, "points": points, "polys": polys}, output)
    _finish(ok, expect_fail)


@verify_group.command("schur-weyl")
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("-k", "k", type=int, default=3, show_default=True)
@click.option("--points", default=None, help="Defaults to 0,1,...,k-1.")
@click.option("--tau", default=None, help='Transposition "r,s" or "(r s)"; default: all.')
@_with_common
def schur_weyl_cmd(n, k, points, tau, output, expect_fail):
    """Transposition preimages act as place permutations (gl only)."""
    pts = parse_points(points) if points else list(range(k))
    if len(pts) != k:
        raise click.UsageError(f"need {k} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise click.UsageError("points must be pairwise distinct")
    if n**k > _max_dim():
        raise click.UsageError(
            f"carrier dimension {n**k} exceeds the limit {_max_dim()}"
        )
    reports = []
    if tau is not None:
        reports.append(verify.check_schur_weyl(parse_transposition(tau, k), n, k, pts))
    else:
        for r in range(1, k + 1):
            for s in range(r + 1, k + 1):
                reports.append(verify.check_schur_weyl((r, s), n, k, pts))
        reports.append(verify.check_schur_weyl_composition(n, k, pts))
    ok = _emit(reports, {"command": "schur-weyl", "n": n, "k": k,
                         "points": points, "tau": tau}, output)
    _finish(ok, expect_fail)


@verify_group.command("span")
@_family_option
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--points", default="0,1", show_default=True)
@click.option("--degree-cap", default="auto", show_default=True)
@_with_common
def span_cmd(family, n, points, degree_cap, output, expect_fail):
    """Current images span the commutant of the algebra action."""
    pts = parse_points(points)
    if len(set(pts)) != len(pts):
        raise click.UsageError("points must be pairwise distinct")
    em = _build_module(family, n, [(1,) + (0,) * (n - 1)] * len(pts), pts)
    cap = _resolve_cap(degree_cap, em.d)
    reports = [verify.check_span_surjectivity(em, degree_cap=cap)]
    ok = _emit(reports, {"command": "span", "family": family, "n": n,
                         "points": points, "degree_cap": cap}, output)
    _finish(ok, expect_fail)


@verify_group.command("irreducibility")
@_family_option
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--points", default="0,1,2", show_default=True)
@click.option("--weights", default=None, help="Defaults to the standard module per point.")
@click.option("--degree-cap", default="auto", show_default=True)
@click.option("--isotypic/--no-isotypic", default=None,
              help="Force or skip the per-component Burnside check.")
@_with_common
def irreducibility_cmd(family, n, points, weights, degree_cap, isotypic,
                       output, expect_fail):
    """Evaluation-module irreducibility over the current algebra."""
    pts = parse_points(points)
    if weights is None:
        lam = [(1,) + (0,) * (n - 1)] * len(pts)
    else:
        lam = parse_weights(weights, n, family)
        if len(lam) != len(pts):
            raise click.UsageError("need one weight per point")
    em = _build_module(family, n, lam, pts)
    cap = _resolve_cap(degree_cap, em.d)
    reports = [verify.check_evaluation_irreducibility(em, degree_cap=cap)]
    do_isotypic = isotypic if isotypic is not None else family != SO
    if do_isotypic:
        if family == SO:
            raise click.UsageError(
                "the isotypic check needs a split Cartan (gl or sp)"
            )
        reports.append(verify.check_isotypic_irreducibility(em, degree_cap=cap))
    ok = _emit(reports, {"command": "irreducibility", "family": family, "n": n,
                         "points": points, "weights": weights,
                         "degree_cap": cap}, output)
    _finish(ok, expect_fail)


@verify_group.command("cycle-generation")
@click.option("-n", "n", type=int, default=2, show_default=True)
@click.option("--points", default="0,1", show_default=True)
@click.option("--degree-cap", default="auto", show_default=True)
@_with_common
def cycle_generation_cmd(n, points, degree_cap, output, expect_fail):
    """Cycle currents alone generate the commutant algebra (gl only)."""
    pts = parse_points(points)
    if len(set(pts)) != len(pts):
        raise click.UsageError("points must be pairwise distinct")
    em = _build_module(GL, n, [(1,) + (0,) * (n - 1)] * len(pts), pts)
    cap = _resolve_cap(degree_cap, em.d)
    reports = [verify.check_cycle_generation(em, degree_cap=cap)]
    ok = _emit(reports, {"command": "cycle-generation", "n": n,
                         "points": points, "degree_cap": cap}, output)
    _finish(ok, expect_fail)


@verify_group.command("all")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--profile", type=click.Choice(["desk", "quick"]), default="desk",
              show_default=True)
@_with_common
def all_cmd(seed, profile, output, expect_fail):
    """The full acceptance sweep across families, sizes and controls."""
    reports = verify.run_acceptance_suite(seed=seed, profile=profile)
    ok = _emit(reports, {"command": "all", "seed": seed, "profile": profile}, output)
    _finish(ok, expect_fail)


if __name__ == "__main__":
    main()
