"""Matrix-product codes and their Schur squares.

A matrix-product code [C_1, ..., C_s]A glues s constituent codes of common
length n into one code of length n*l through a rank-s defining matrix
A in GF(q)^(s x l).  This module builds such codes, evaluates the
minimum-distance bound min_i D_i * d_i (with exactness detection for nested
constituents), computes duals for invertible square A, and rewrites Schur
products/squares of the (u, u+v), Vandermonde, and binomial-triangle families
as matrix-product codes again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import linalg
from .codes import DEFAULT_BUDGET, LinearCode, min_distance_or_inf, sum_codes
from .errors import VerificationError
from .linalg import GFMatrix


class DistanceInfo(NamedTuple):
    """A minimum-distance value together with whether it is exact."""
    value: float
    exact: bool


@dataclass(frozen=True)
class MatrixProductSpec:
    """A defining matrix plus its constituent codes."""

    A: GFMatrix
    constituents: tuple

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        s, l = self.A.shape
        if s > l or self.A.rank != s:
            raise ValueError(f"defining matrix must have full row rank, shape {s}x{l}")
        if len(self.constituents) != s:
            raise ValueError(f"need {s} constituent codes, got {len(self.constituents)}")
        field, n = self.field, self.n
        for c in self.constituents:
            if c.field != field or c.n != n:
                raise ValueError("constituents must share field and length")
        if self.A.field != field:
            raise ValueError("defining matrix field differs from constituents")

    @property
    def field(self):
        return self.constituents[0].field

    @property
    def n(self):
        return self.constituents[0].n

    @property
    def s(self):
        return self.A.shape[0]

    @property
    def l(self):
        return self.A.shape[1]

    def nested(self) -> bool:
        """True when C_1 >= C_2 >= ... >= C_s as subspaces."""
        return all(self.constituents[i].contains(self.constituents[i + 1])
                   for i in range(self.s - 1))

    def to_dict(self) -> dict:
        return {
            "A": self.A.to_lists(),
            "constituents": [c.to_dict() for c in self.constituents],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MatrixProductSpec":
        constituents = tuple(LinearCode.from_dict(c) for c in d["constituents"])
        field = constituents[0].field
        return cls(GFMatrix(field, d["A"]), constituents)


@dataclass(frozen=True)
class MPDistanceReport:
    """Evaluation of the bound d(C) >= min_i D_i d_i."""

    bound: float
    exact: bool
    per_row: tuple  # ((D_i, DistanceInfo(d_i)), ...)


def build(spec: MatrixProductSpec) -> LinearCode:
    """Materialize the code; the generator stacks a_ij-scaled blocks of the
    constituent generators, one column block per column of A."""
    field, n, l = spec.field, spec.n, spec.l
    blocks = []
    A = spec.A.a
    for i, code in enumerate(spec.constituents):
        if code.k == 0:
            continue
        row_block = np.hstack([
            field.mul_arr(np.int32(int(A[i, j])), code.gen) for j in range(l)
        ])
        blocks.append(row_block)
    if not blocks:
        return LinearCode.zero(field, n * l)
    out = LinearCode(field, n * l, np.vstack(blocks))
    expected = sum(c.k for c in spec.constituents)
    if out.k != expected:
        raise VerificationError(
            f"built dimension {out.k} != sum of constituent dimensions {expected}")
    return out


def row_code(spec: MatrixProductSpec, i: int) -> LinearCode:
    """Span of the first i rows of the defining matrix, as a length-l code."""
    return LinearCode(spec.field, spec.l, spec.A.a[:i])


def distance_bound(spec: MatrixProductSpec,
                   constituent_distances: Optional[list] = None,
                   row_distances: Optional[list] = None,
                   budget: int = DEFAULT_BUDGET) -> MPDistanceReport:
    """The bound min_i D_i d_i, where D_i is the distance of the span of the
    first i rows of A and d_i the distance of the i-th constituent.

    Distances not supplied are computed exactly by enumeration.  The report
    is flagged exact when the constituents are nested and all d_i are exact.
    """
    if constituent_distances is None:
        constituent_distances = [
            DistanceInfo(min_distance_or_inf(c, budget), True)
            for c in spec.constituents
        ]
    elif len(constituent_distances) != spec.s:
        raise ValueError(f"need {spec.s} constituent distances, "
                         f"got {len(constituent_distances)}")
    if row_distances is None:
        row_distances = [row_code(spec, i + 1).min_distance(budget)
                         for i in range(spec.s)]
    elif len(row_distances) != spec.s:
        raise ValueError(f"need {spec.s} row distances, got {len(row_distances)}")
    per_row = tuple((int(D), DistanceInfo(d.value, d.exact))
                    for D, d in zip(row_distances, constituent_distances))
    bound = min(D * d.value for D, d in per_row)
    exact = spec.nested() and all(d.exact for _, d in per_row)
    if math.isfinite(bound):
        bound = int(bound)
    return MPDistanceReport(bound=bound, exact=exact, per_row=per_row)


def dual_mp(spec: MatrixProductSpec):
    """Both matrix-product forms of the dual, for invertible square A:
    [C_1^perp..C_s^perp](A^-1)^T and [C_s^perp..C_1^perp](J (A^-1)^T)."""
    s, l = spec.A.shape
    if s != l:
        raise ValueError("dual form requires a square defining matrix")
    field = spec.field
    try:
        ainv_t = linalg.inverse(field, spec.A.a).T.copy()
    except ValueError:
        raise ValueError("defining matrix is singular") from None
    duals = tuple(c.dual() for c in spec.constituents)
    first = MatrixProductSpec(GFMatrix(field, ainv_t), duals)
    reversed_form = MatrixProductSpec(GFMatrix(field, ainv_t[::-1].copy()),
                                      duals[::-1])
    return first, reversed_form


# ---------------------------------------------------------------------------
# (u, u+v)
# ---------------------------------------------------------------------------

def uuv_matrix(field) -> GFMatrix:
    return GFMatrix(field, [[1, 1], [0, 1]])


def uuv_spec(c1: LinearCode, c2: LinearCode) -> MatrixProductSpec:
    return MatrixProductSpec(uuv_matrix(c1.field), (c1, c2))


def product_uuv(c1, c2, c1p, c2p) -> MatrixProductSpec:
    """[C1,C2]A * [C1',C2']A as [C1*C1', C1*C2' + C2*C1' + C2*C2']A."""
    second = sum_codes([c1.schur(c2p), c2.schur(c1p), c2.schur(c2p)])
    return MatrixProductSpec(uuv_matrix(c1.field), (c1.schur(c1p), second))


def square_uuv(c1: LinearCode, c2: LinearCode,
               constituent_distances: Optional[list] = None,
               budget: int = DEFAULT_BUDGET):
    """The square of [C1,C2]A as a matrix-product spec plus distance report.

    When C2 is contained in C1 the second constituent simplifies to C1*C2 and
    the reported distance is exact (nested constituents).
    """
    c1sq = c1.square()
    if c1.contains(c2):
        second = c1.schur(c2)
    else:
        second = (c1 + c2).schur(c2)
    spec = MatrixProductSpec(uuv_matrix(c1.field), (c1sq, second))
    return spec, distance_bound(spec, constituent_distances, budget=budget)


# ---------------------------------------------------------------------------
# Vandermonde
# ---------------------------------------------------------------------------

def default_alphas(field) -> tuple:
    """All q-1 nonzero elements in primitive-power order."""
    return tuple(field.pow(field.primitive, k) for k in range(field.q - 1))


def vandermonde_matrix(field, s: int, alphas=None) -> GFMatrix:
    if alphas is None:
        alphas = default_alphas(field)
    alphas = tuple(int(a) for a in alphas)
    if any(a == 0 for a in alphas):
        raise ValueError("evaluation points must be nonzero")
    if len(set(alphas)) != len(alphas):
        raise ValueError("evaluation points must be distinct")
    if not 1 <= s <= len(alphas):
        raise ValueError(f"need 1 <= s <= {len(alphas)} rows, got {s}")
    if s > field.q - 1:
        raise ValueError(f"at most q-1={field.q - 1} rows, got {s}")
    rows = [[field.pow(a, i) for a in alphas] for i in range(s)]
    return GFMatrix(field, rows)


def vandermonde_spec(codes, alphas=None) -> MatrixProductSpec:
    codes = tuple(codes)
    field = codes[0].field
    return MatrixProductSpec(vandermonde_matrix(field, len(codes), alphas), codes)


def square_vandermonde(codes, alphas=None) -> MatrixProductSpec:
    """Square of [C_0..C_{s-1}]V_q(s) as [.., sum_{i+j=l} C_i C_j, ..]V_q(s~)
    with s~ = min(2s-1, q-1) and index sums taken mod q-1."""
    codes = tuple(codes)
    s = len(codes)
    field = codes[0].field
    q = field.q
    if s > q - 1:
        raise ValueError(f"at most q-1={q - 1} constituents, got {s}")
    if alphas is None:
        alphas = default_alphas(field)
    s_tilde = min(2 * s - 1, q - 1)
    if s_tilde > len(alphas):
        raise ValueError(
            f"square needs min(2s-1, q-1)={s_tilde} rows but only "
            f"{len(alphas)} evaluation points")
    buckets = [[] for _ in range(s_tilde)]
    for i in range(s):
        for j in range(s):
            buckets[(i + j) % (q - 1)].append(codes[i].schur(codes[j]))
    constituents = tuple(sum_codes(b) for b in buckets)
    return MatrixProductSpec(vandermonde_matrix(field, s_tilde, alphas), constituents)


def _vandermonde_full_alphas(spec: MatrixProductSpec):
    """The evaluation points when A is a Vandermonde matrix on all q-1 nonzero
    field elements, else None."""
    field, A = spec.field, spec.A.a
    s, l = A.shape
    if l != field.q - 1:
        return None
    if not np.all(A[0] == 1):
        return None
    if s == 1:
        return tuple(default_alphas(field))
    alphas = A[1]
    if 0 in alphas or len(set(int(a) for a in alphas)) != l:
        return None
    for i in range(2, s):
        if not np.array_equal(A[i], field.mul_arr(A[i - 1], alphas)):
            return None
    return tuple(int(a) for a in alphas)


def vandermonde_square_distance_bound(spec: MatrixProductSpec,
                                      constituent_distances: Optional[list] = None,
                                      budget: int = DEFAULT_BUDGET) -> MPDistanceReport:
    """Distance bound for a Vandermonde-defined matrix-product code:
    min over l of (q-l-1) * d(constituent_l).

    With the default all-nonzero-elements column set, the row-span codes are
    Reed-Solomon and D_{l+1} = q-l-1 is exact without enumeration; for other
    column sets the row distances are enumerated.
    """
    q = spec.field.q
    if _vandermonde_full_alphas(spec) is not None:
        row_distances = [q - i - 1 for i in range(spec.s)]
    else:
        row_distances = None
    return distance_bound(spec, constituent_distances, row_distances, budget)


# ---------------------------------------------------------------------------
# binomial triangle MS_p
# ---------------------------------------------------------------------------

def lucas_binom(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        out = (out * math.comb(ni, ki)) % p
        n //= p
        k //= p
    return out


def msp_matrix(field) -> GFMatrix:
    """The p x p matrix [C(p-i, j-1) mod p], i,j = 1..p."""
    p = field.p
    rows = [[lucas_binom(p - i, j - 1, p) for j in range(1, p + 1)]
            for i in range(1, p + 1)]
    return GFMatrix(field, rows)


def msp_star_matrix(field) -> GFMatrix:
    """Column-scaled variant [C(p-i, j-1) * C(p-1, j-1) mod p]."""
    p = field.p
    rows = [[(lucas_binom(p - i, j - 1, p) * lucas_binom(p - 1, j - 1, p)) % p
             for j in range(1, p + 1)]
            for i in range(1, p + 1)]
    return GFMatrix(field, rows)


def msp_spec(codes) -> MatrixProductSpec:
    codes = tuple(codes)
    field = codes[0].field
    if len(codes) != field.p:
        raise ValueError(f"need p={field.p} constituents (field characteristic), "
                         f"got {len(codes)}")
    return MatrixProductSpec(msp_matrix(field), codes)


def square_msp(codes) -> MatrixProductSpec:
    """Square of [C_1..C_p]MS_p for a nested chain C_1 >= ... >= C_p over a
    field of characteristic p: [sum_{i+j=2} C_i C_j, ..., sum_{i+j=p+1}]MS_p^*.

    Nestedness is required (it is what lets products with i+j > p+1 be
    absorbed) and is verified, not assumed.
    """
    codes = tuple(codes)
    field = codes[0].field
    p = field.p
    if len(codes) != p:
        raise ValueError(f"need p={p} constituents (field characteristic), "
                         f"got {len(codes)}")
    for i in range(p - 1):
        if not codes[i].contains(codes[i + 1]):
            raise ValueError("constituents must be nested C_1 >= ... >= C_p")
    buckets = []
    for total in range(2, p + 2):
        parts = [codes[i - 1].schur(codes[total - i - 1])
                 for i in range(max(1, total - p), min(p, total - 1) + 1)]
        buckets.append(sum_codes(parts))
    return MatrixProductSpec(msp_star_matrix(field), tuple(buckets))
