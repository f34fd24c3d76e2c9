"""Command-line surface.

Exit codes: 0 on success, 2 on a precondition violation (bad arguments,
invalid inputs), 3 when a verification suite reports failures.
"""

from __future__ import annotations

import json
import math
import sys

import click

from . import matrix_product as mp
from . import tables, verify
from .codes import DEFAULT_BUDGET, LinearCode
from .cyclic import (CosetSet, CyclicCode, RestrictedWeightConfig,
                     dual_distance_bound_W, restricted_weight_set)
from .errors import BudgetExceeded, VerificationError
from .galois import field_from_order
from .hermitian import build_c_rs, c_rs_params, hermitian_curve, square_c_rs


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _echo_json(obj):
    click.echo(json.dumps(obj, indent=2))


def _inf_str(v):
    return "inf" if isinstance(v, float) and math.isinf(v) else v


def _load_code(fh) -> LinearCode:
    try:
        return LinearCode.from_dict(json.load(fh))
    except KeyError as e:
        raise ValueError(f"code descriptor is missing field {e}") from None


def _load_spec(fh) -> mp.MatrixProductSpec:
    try:
        return mp.MatrixProductSpec.from_dict(json.load(fh))
    except KeyError as e:
        raise ValueError(f"spec descriptor is missing field {e}") from None


def parse_generating_set(q: int, n: int | None, text: str) -> CosetSet:
    """Parse 'reps:1,3,5' or 'W:r=5,s=5,m=2' into a coset set.

    For the W form the length is forced to q^r - 1; a given n must agree.
    """
    kind, _, body = text.partition(":")
    if kind == "reps":
        if n is None:
            raise ValueError("reps:... needs an explicit length n")
        reps = [int(x) for x in body.split(",") if x != ""]
        return CosetSet.from_reps(q, n, reps)
    if kind == "W":
        params = {}
        for part in body.split(","):
            key, _, value = part.partition("=")
            params[key.strip()] = int(value)
        missing = {"r", "s", "m"} - set(params)
        if missing:
            raise ValueError(f"W spec is missing {sorted(missing)}")
        cfg = RestrictedWeightConfig(q, params["r"], params["s"], params["m"])
        if n is not None and n != cfg.n:
            raise ValueError(f"W spec implies n={cfg.n}, but n={n} was given")
        return restricted_weight_set(cfg)
    raise ValueError(f"generating set must start with 'reps:' or 'W:', got {text!r}")


@click.group()
def main():
    """Finite-field coding engine: cyclic and Hermitian codes, their Schur
    squares, and matrix-product constructions."""


@main.command()
@click.option("--q", required=True, type=int, help="Base field size.")
@click.option("--n", required=True, type=int, help="Modulus.")
@click.option("--rep", "reps", multiple=True, type=int, required=True,
              help="Coset representative (repeatable).")
@click.option("--json", "as_json", is_flag=True)
def coset(q, n, reps, as_json):
    """Union of q-cyclotomic cosets mod n, with window statistics."""
    try:
        S = CosetSet.from_reps(q, n, reps)
    except ValueError as e:
        _fail(str(e), 2)
    info = {
        "q": q, "n": n, "elems": sorted(S.elems), "size": len(S),
        "amplitude": S.amplitude() if S.elems else None,
        "amplitude_max_reading": S.amplitude_upper() if S.elems else None,
        "largest_consecutive_run": S.largest_consecutive_run(),
    }
    if as_json:
        _echo_json(info)
    else:
        for key, value in info.items():
            click.echo(f"{key}: {value}")


@main.command()
@click.option("--q", required=True, type=int)
@click.option("--n", type=int, default=None, help="Length (implied by W:... sets).")
@click.option("--set", "set_text", required=True,
              help="Generating set: 'reps:0,1,3' or 'W:r=5,s=5,m=2'.")
@click.option("--distance", is_flag=True, help="Brute-force the exact distance.")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def cyclic(q, n, set_text, distance, budget, as_json):
    """Parameters of the cyclic code with the given generating set."""
    try:
        I = parse_generating_set(q, n, set_text)
        handle = CyclicCode(I)
    except ValueError as e:
        _fail(str(e), 2)
    info = {
        "q": q, "n": handle.n, "dim": handle.dim,
        "d_bound": _inf_str(handle.distance_bound()),
        "d_bound_max_reading": _inf_str(handle.distance_bound("max")),
        "dual_dim": len(handle.J),
        "dual_d_bound": _inf_str(handle.dual().distance_bound()),
        "exact": {"dim": True, "d_bound": False},
    }
    if distance:
        try:
            info["d"] = handle.code.min_distance(budget)
            info["exact"]["d"] = True
        except BudgetExceeded as e:
            _fail(str(e), 2)
    if as_json:
        _echo_json(info)
    else:
        for key, value in info.items():
            click.echo(f"{key}: {value}")


@main.command()
@click.option("--q", type=int, help="Base field size (cyclic pair mode).")
@click.option("--n", type=int, default=None)
@click.option("--set1", default=None, help="Generating set of the outer code.")
@click.option("--set2", default=None, help="Generating set of the inner code.")
@click.option("--code", "code_path", type=click.Path(exists=True), default=None,
              help="JSON code descriptor; its direct Schur square is computed.")
@click.option("--distance", is_flag=True, help="Also brute-force exact distances.")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def square(q, n, set1, set2, code_path, distance, budget, as_json):
    """Schur square: either of a serialized code, or of the (u,u+v) code on a
    pair of cyclic codes (computed by coset arithmetic)."""
    try:
        if code_path is not None:
            with open(code_path) as fh:
                code = _load_code(fh)
            sq = code.square()
            info = {"n": code.n, "dim": code.k, "dim_square": sq.k,
                    "exact": {"dim": True, "dim_square": True}}
            if distance:
                info["d"] = code.min_distance(budget)
                info["d_square"] = sq.min_distance(budget)
                info["exact"]["d"] = info["exact"]["d_square"] = True
        else:
            if q is None or set1 is None or set2 is None:
                raise ValueError("need --code, or --q with --set1 and --set2")
            I1 = parse_generating_set(q, n, set1)
            I2 = parse_generating_set(q, I1.n, set2)
            nn = I1.n
            # the square's generating sets: I1+I1 and I2+(I1 u I2)
            S11, S12 = I1.sumset(I1), I2.sumset(I1 | I2)
            info = {
                "q": q, "n": 2 * nn,
                "dim": len(I1) + len(I2),
                "d_bound": min(2 * (nn - I1.amplitude() + 1),
                               nn - I2.amplitude() + 1),
                "d_bound_max_reading": min(2 * (nn - I1.amplitude_upper() + 1),
                                           nn - I2.amplitude_upper() + 1),
                "dim_square": len(S11) + len(S12),
                "d_square_bound": min(2 * (nn - S11.amplitude() + 1),
                                      nn - S12.amplitude() + 1),
                "d_square_bound_max_reading": min(2 * (nn - S11.amplitude_upper() + 1),
                                                  nn - S12.amplitude_upper() + 1),
                "exact": {"dim": True, "dim_square": True,
                          "d_bound": False, "d_square_bound": False},
            }
    except (ValueError, BudgetExceeded) as e:
        _fail(str(e), 2)
    if as_json:
        _echo_json(info)
    else:
        for key, value in info.items():
            click.echo(f"{key}: {value}")


@main.command("mp")
@click.option("--spec", "spec_path", type=click.Path(exists=True), required=True,
              help="JSON matrix-product descriptor {A, constituents}.")
@click.option("--dual", "want_dual", is_flag=True,
              help="Also emit the dual spec (square invertible A only).")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def mp_cmd(spec_path, want_dual, budget, as_json):
    """Build a matrix-product code and evaluate its distance bound."""
    try:
        with open(spec_path) as fh:
            spec = _load_spec(fh)
        built = mp.build(spec)
        try:
            report = mp.distance_bound(spec, budget=budget)
            bound_info = {"bound": _inf_str(report.bound), "exact": report.exact,
                          "per_row": [[D, _inf_str(d.value), d.exact]
                                      for D, d in report.per_row]}
        except BudgetExceeded as e:
            bound_info = {"unavailable": str(e)}
        info = {"n": built.n, "dim": built.k, "distance": bound_info}
        if want_dual:
            first, _ = mp.dual_mp(spec)
            info["dual"] = first.to_dict()
    except ValueError as e:
        _fail(str(e), 2)
    if as_json:
        _echo_json(info)
    else:
        click.echo("defining matrix:")
        click.echo(spec.A.to_text())
        click.echo(json.dumps(info, indent=2))


@main.command()
@click.option("--q", required=True, type=int, help="Curve parameter (codes over GF(q^2)).")
@click.option("--r", required=True, type=int)
@click.option("--s", required=True, type=int)
@click.option("--verify-ranks", is_flag=True,
              help="Re-verify dimensions by explicit rank computation.")
def hermitian(q, r, s, verify_ranks):
    """Closed-form parameters of the Vandermonde-Hermitian code and square."""
    try:
        n, k, d, k_star, d_star = c_rs_params(q, r, s)
    except ValueError as e:
        _fail(str(e), 2)
    verified = False
    if verify_ranks:
        try:
            curve = hermitian_curve(q)
            built = mp.build(build_c_rs(curve, r, s))
            built_sq = mp.build(square_c_rs(curve, r, s, verify=False))
        except VerificationError as e:
            _fail(str(e), 3)
        if (built.n, built.k) != (n, k) or built_sq.k != k_star:
            _fail("rank verification failed", 3)
        verified = True
    _echo_json({"n": n, "k": k, "d_designed": d, "k_star": k_star,
                "d_star_designed": d_star, "verified": verified})


@main.group()
def table():
    """Emit the built-in parameter tables."""


@table.command("restricted-weight")
@click.option("--q", type=int, default=2, show_default=True)
@click.option("--s", type=int, default=5, show_default=True)
@click.option("--m1", type=int, default=2, show_default=True)
@click.option("--m2", type=int, default=1, show_default=True)
@click.option("--r-min", type=int, default=5, show_default=True)
@click.option("--r-max", type=int, default=11, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["markdown", "csv", "json"]),
              default="markdown", show_default=True)
def table_restricted(q, s, m1, m2, r_min, r_max, fmt):
    """Weight-threshold cyclic pairs under (u,u+v), with their squares."""
    try:
        rows = tables.restricted_weight_table(q, s, m1, m2, range(r_min, r_max + 1))
    except ValueError as e:
        _fail(str(e), 2)
    click.echo(tables.render_table(rows, "restricted-weight", fmt), nl=False)


@table.command("hermitian")
@click.option("--q", type=int, default=4, show_default=True)
@click.option("--rows", "rows_text", default=None,
              help="Comma-separated r:s pairs, e.g. '13:2,16:4'. Default: the "
                   "13 built-in GF(16) rows.")
@click.option("--format", "fmt", type=click.Choice(["markdown", "csv", "json"]),
              default="markdown", show_default=True)
def table_hermitian(q, rows_text, fmt):
    """Closed-form Vandermonde-Hermitian parameter rows."""
    try:
        if rows_text is None:
            pairs = tables.DEFAULT_HERMITIAN_ROWS
        else:
            pairs = tuple(tuple(int(x) for x in part.split(":"))
                          for part in rows_text.split(","))
        rows = tables.hermitian_table(q, pairs)
    except ValueError as e:
        _fail(str(e), 2)
    click.echo(tables.render_table(rows, "hermitian", fmt), nl=False)


@main.command("verify")
@click.option("--suite", default="all", show_default=True,
              help="One of uuv, vandermonde, msp, cyclic, appendix, hermitian, all.")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--cases", type=int, default=None,
              help="Cases per randomized suite (default: suite-specific).")
@click.option("--tier", type=click.Choice(["small", "full"]), default="small",
              show_default=True, help="full adds the GF(16) length-960 rank checks.")
@click.option("--json", "as_json", is_flag=True)
def verify_cmd(suite, seed, cases, tier, as_json):
    """Run oracle-equality suites; exit 0 only if every case passes."""
    try:
        reports = verify.run_suite(suite, seed=seed, cases=cases,
                                   full=(tier == "full"))
    except ValueError as e:
        _fail(str(e), 2)
    payload = {"seed": seed, "tier": tier,
               "suites": [r.to_dict() for r in reports],
               "ok": all(r.ok for r in reports)}
    if as_json:
        _echo_json(payload)
    else:
        for r in reports:
            status = "pass" if r.ok else "FAIL"
            click.echo(f"{r.suite}: {status} ({r.cases} checks)")
            for f in r.failures:
                click.echo(f"  {f}")
    if not payload["ok"]:
        sys.exit(3)


if __name__ == "__main__":
    main()
