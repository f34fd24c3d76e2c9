"""Randomized oracle suites: each theorem-backed rewrite is checked against a
directly spanned Schur product/square on small instances.

The suites are seeded and deterministic; they back both the CLI ``verify``
command and the acceptance tests.  A case failure never raises: it is
collected into the report so a whole suite run always completes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import matrix_product as mp
from .codes import LinearCode, random_code, random_subcode
from .cyclic import CosetSet, CyclicCode, eval_code, subfield_subcode
from .errors import BudgetExceeded
from .galois import make_field
from .hermitian import build_c_rs, hermitian_curve, product_check, square_c_rs
from .linalg import GFMatrix, rank

SUITE_NAMES = ("uuv", "vandermonde", "msp", "cyclic", "appendix", "hermitian")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str):
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "cases": self.cases,
                "ok": self.ok, "failures": list(self.failures)}


def _nested_chain(field_, n, length, rng):
    top = random_code(field_, n, rng.randint(1, 3), rng)
    while top.k == 0:
        top = random_code(field_, n, rng.randint(1, 3), rng)
    chain = [top]
    for _ in range(length - 1):
        chain.append(random_subcode(chain[-1], rng.randint(0, chain[-1].k), rng))
    return chain


def suite_uuv(seed: int = 1, cases: int = 60) -> SuiteReport:
    """Products and squares of (u, u+v) codes against direct Schur spans,
    plus exact nested distances."""
    rep = SuiteReport("uuv", seed)
    rng = random.Random(seed)
    for case in range(cases):
        q = rng.choice([2, 3])
        f = make_field(q, 1)
        n = rng.randint(2, 7)
        c1, c2 = (random_code(f, n, rng.randint(0, 3), rng) for _ in range(2))
        c1p, c2p = (random_code(f, n, rng.randint(0, 3), rng) for _ in range(2))
        if case % 2:
            c2 = random_subcode(c1, rng.randint(0, c1.k), rng) if c1.k else c2

        C = mp.build(mp.uuv_spec(c1, c2))
        Cp = mp.build(mp.uuv_spec(c1p, c2p))
        prod_spec = mp.product_uuv(c1, c2, c1p, c2p)
        rep.check(mp.build(prod_spec) == C.schur(Cp),
                  f"case {case}: product form != direct Schur span (q={q}, n={n})")

        sq_spec, bound = mp.square_uuv(c1, c2)
        direct = C.square()
        rep.check(mp.build(sq_spec) == direct,
                  f"case {case}: square form != direct square (q={q}, n={n})")
        if bound.exact and direct.k:
            rep.check(direct.min_distance() == bound.bound,
                      f"case {case}: nested square distance {bound.bound} not exact")
    return rep


def suite_vandermonde(seed: int = 1, cases: int = 60) -> SuiteReport:
    """Vandermonde squares against direct squares, over default and truncated
    column sets, and the distance bound against enumeration."""
    rep = SuiteReport("vandermonde", seed)
    rng = random.Random(seed)
    for case in range(cases):
        q = rng.choice([4, 5, 7])
        f = make_field(2, 2) if q == 4 else make_field(q, 1)
        s = rng.randint(1, 3)
        n = rng.randint(1, 4)
        codes = [random_code(f, n, rng.randint(1, 2), rng) for _ in range(s)]

        alphas = None
        if case % 3 == 2 and 2 * s - 1 < q - 1:
            # truncated column set exercises the enumerated row distances
            all_a = list(mp.default_alphas(f))
            l = rng.randint(2 * s - 1, q - 2)
            alphas = tuple(sorted(rng.sample(all_a, l)))

        spec = mp.vandermonde_spec(codes, alphas)
        sq = mp.square_vandermonde(codes, alphas)
        built_sq = mp.build(sq)
        rep.check(built_sq == mp.build(spec).square(),
                  f"case {case}: square form != direct square (q={q}, s={s}, n={n})")

        if all(c.k for c in sq.constituents):
            try:
                bound = mp.vandermonde_square_distance_bound(sq, budget=1 << 20)
                actual = built_sq.min_distance(budget=1 << 20)
            except BudgetExceeded:
                continue
            rep.check(actual >= bound.bound,
                      f"case {case}: bound {bound.bound} above true distance {actual}")
            if bound.exact:
                rep.check(actual == bound.bound,
                          f"case {case}: nested bound {bound.bound} != distance {actual}")
    return rep


def suite_msp(seed: int = 1, cases: int = 60) -> SuiteReport:
    """Binomial-triangle squares of nested chains against direct squares."""
    rep = SuiteReport("msp", seed)
    rng = random.Random(seed)
    for case in range(cases):
        p = rng.choice([2, 3, 5])
        f = make_field(2, 2) if (p == 2 and case % 4 == 0) else make_field(p, 1)
        n = rng.randint(2, 6)
        chain = _nested_chain(f, n, p, rng)
        spec = mp.msp_spec(chain)
        sq = mp.square_msp(chain)
        rep.check(mp.build(sq) == mp.build(spec).square(),
                  f"case {case}: MS_{p} square form != direct square (n={n})")
    return rep


def _coset_closed_subsets(q, n):
    reps = CosetSet.full(q, n).reps()
    cosets = [CosetSet.coset(q, n, a) for a in reps]
    out = []
    for bits in itertools.product([0, 1], repeat=len(cosets)):
        e = frozenset()
        for b, cs in zip(bits, cosets):
            if b:
                e |= cs.elems
        out.append(CosetSet(q, n, e))
    return out


def _random_coset_set(q, n, rng):
    reps = CosetSet.full(q, n).reps()
    chosen = [a for a in reps if rng.random() < 0.5]
    return CosetSet.from_reps(q, n, chosen) if chosen else CosetSet.empty(q, n)


def suite_cyclic(seed: int = 1, cases: int = 60) -> SuiteReport:
    """Coset arithmetic against materialized sums/products: exhaustive at
    n=7 and randomized at n in {15, 31}."""
    rep = SuiteReport("cyclic", seed)
    rng = random.Random(seed)
    for I1 in _coset_closed_subsets(2, 7):
        for I2 in _coset_closed_subsets(2, 7):
            h1, h2 = CyclicCode(I1), CyclicCode(I2)
            rep.check((h1 * h2).code == h1.code.schur(h2.code),
                      f"n=7 product mismatch: {sorted(I1.elems)}, {sorted(I2.elems)}")
            rep.check((h1 + h2).code == h1.code + h2.code,
                      f"n=7 sum mismatch: {sorted(I1.elems)}, {sorted(I2.elems)}")
    for case in range(cases):
        n = rng.choice([15, 31])
        I1, I2 = _random_coset_set(2, n, rng), _random_coset_set(2, n, rng)
        h1, h2 = CyclicCode(I1), CyclicCode(I2)
        prod = h1 * h2
        rep.check(prod.code == h1.code.schur(h2.code),
                  f"case {case}: n={n} product mismatch")
        rep.check((h1 + h2).code == h1.code + h2.code,
                  f"case {case}: n={n} sum mismatch")
        rep.check(prod.dim == len(I1.sumset(I2)),
                  f"case {case}: n={n} product dimension mismatch")
        if prod.dim:
            bound = prod.distance_bound()
            try:
                rep.check(prod.code.min_distance() >= bound,
                          f"case {case}: n={n} BCH bound above true distance")
            except BudgetExceeded:
                pass
    return rep


def suite_appendix(seed: int = 1, cases: int = 40) -> SuiteReport:
    """The evaluation-code oracle: C(I) equals the subfield subcode of the
    extension-field code on -I, and products of those codes multiply their
    exponent sets."""
    rep = SuiteReport("appendix", seed)
    rng = random.Random(seed)
    f2 = make_field(2, 1)
    for I in _coset_closed_subsets(2, 7):
        B = eval_code(2, 7, I.neg().elems)
        rep.check(subfield_subcode(B, f2) == CyclicCode(I).code,
                  f"n=7 subfield subcode mismatch at {sorted(I.elems)}")
    for case in range(cases):
        n = rng.choice([7, 15])
        I1, I2 = _random_coset_set(2, n, rng), _random_coset_set(2, n, rng)
        B1 = eval_code(2, n, I1.neg().elems)
        B2 = eval_code(2, n, I2.neg().elems)
        B12 = eval_code(2, n, I1.sumset(I2).neg().elems)
        rep.check(B1.schur(B2) == B12,
                  f"case {case}: n={n} extension-code product mismatch")
        if case % 2 == 0:
            I = _random_coset_set(2, 15, rng)
            B = eval_code(2, 15, I.neg().elems)
            rep.check(subfield_subcode(B, f2) == CyclicCode(I).code,
                      f"case {case}: n=15 subfield subcode mismatch")
    return rep


def suite_hermitian(seed: int = 1, full: bool = False) -> SuiteReport:
    """Point counts, dimension formulas, product thresholds, and the square
    collapse; full=True adds the GF(16) rank checks at length 960."""
    rep = SuiteReport("hermitian", seed)
    for q in (2, 3):
        curve = hermitian_curve(q)
        rep.check(len(curve.points) == q ** 3, f"q={q}: point count")
        for r in curve.r_window():
            rep.check(curve.code(r).k == r - curve.genus + 1,
                      f"q={q}, r={r}: dimension formula")
        g = curve.genus
        for ri, rj in [(2 * g + 1, 2 * g), (2 * g + 2, 2 * g + 1), (0, 2 * g)]:
            v = product_check(curve, ri, rj)
            rep.check(v.inclusion, f"q={q}: product inclusion at ({ri},{rj})")
            rep.check(not v.equality_expected or v.equality,
                      f"q={q}: product equality verdict at ({ri},{rj})")

    curve3 = hermitian_curve(3)
    spec = build_c_rs(curve3, 7, 2)
    built = mp.build(spec)
    rep.check((built.n, built.k) == (216, 11), "q=3 C(7,2) parameters")
    sq = square_c_rs(curve3, 7, 2, verify=True)
    built_sq = mp.build(sq)
    rep.check(built_sq == built.square(), "q=3 C(7,2) square collapse")
    rep.check(built_sq.k == 39, "q=3 C(7,2) square dimension")

    if full:
        curve4 = hermitian_curve(4)
        rep.check(len(curve4.points) == 64, "q=4: point count")
        for r, s in [(13, 2), (16, 4)]:
            built = mp.build(build_c_rs(curve4, r, s))
            sq_built = mp.build(square_c_rs(curve4, r, s, verify=False))
            rep.check(built.k == s * (r - 6) + s * (s + 1) // 2,
                      f"q=4 C({r},{s}) rank")
            rep.check(sq_built.k == (2 * s - 1) * (2 * r - 6 + s),
                      f"q=4 C({r},{s}) square rank")
            rep.check(built.square() == sq_built,
                      f"q=4 C({r},{s}) direct square equality")
    return rep


def nested_distance_case(rng) -> str | None:
    """One random nested-constituent matrix-product instance; returns an
    error string when the brute-force distance differs from the bound."""
    q = rng.choice([2, 3])
    f = make_field(q, 1)
    n = rng.randint(2, 6)
    s = rng.randint(2, 3)
    l = rng.randint(s, s + 2)
    while True:
        A = [[rng.randrange(q) for _ in range(l)] for _ in range(s)]
        if rank(f, np.array(A, dtype=np.int32)) == s:
            break
    max_total = 14 if q == 2 else 8  # keeps the brute-force enumeration quick
    chain = _nested_chain(f, n, s, rng)
    while any(c.k == 0 for c in chain) or sum(c.k for c in chain) > max_total:
        chain = _nested_chain(f, n, s, rng)
    spec = mp.MatrixProductSpec(GFMatrix(f, A), tuple(chain))
    report = mp.distance_bound(spec)
    if not report.exact:
        return f"nested instance not reported exact (q={q}, n={n}, s={s})"
    actual = mp.build(spec).min_distance()
    if actual != report.bound:
        return (f"nested distance mismatch: bound {report.bound}, "
                f"actual {actual} (q={q}, n={n}, s={s}, A={A})")
    return None


_SUITE_FUNCS = {
    "uuv": suite_uuv,
    "vandermonde": suite_vandermonde,
    "msp": suite_msp,
    "cyclic": suite_cyclic,
    "appendix": suite_appendix,
}


def run_suite(name: str, seed: int = 1, cases: int | None = None,
              full: bool = False) -> list:
    """Run one named suite (or 'all'); returns a list of SuiteReport."""
    if name == "all":
        return [report for n in SUITE_NAMES
                for report in run_suite(n, seed=seed, cases=cases, full=full)]
    if name == "hermitian":
        return [suite_hermitian(seed=seed, full=full)]
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join(SUITE_NAMES + ('all',))}")
    func = _SUITE_FUNCS[name]
    return [func(seed=seed) if cases is None else func(seed=seed, cases=cases)]
