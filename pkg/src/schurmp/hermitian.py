"""One-point evaluation codes on the Hermitian curve y^q + y = x^(q+1).

The curve over GF(q^2) has exactly q^3 affine rational points and genus
g = q(q-1)/2.  The code with pole budget r evaluates the monomials x^a y^b
(0 <= b <= q-1, a*q + b*(q+1) <= r) at all points; for 2g <= r <= q^3-q^2-1
it is a [q^3, r-g+1, q^3-r] code, and products/sums of two such codes are
again codes of the same kind, which is what makes the Vandermonde
matrix-product family built from them fully computable in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import matrix_product as mp
from .codes import LinearCode
from .errors import VerificationError
from .galois import field_from_order


class HermitianCurve:
    """The affine rational points of y^q + y = x^(q+1) over GF(q^2)."""

    def __init__(self, q: int):
        field = field_from_order(q * q)
        self.q = q
        self.field = field
        self.genus = q * (q - 1) // 2

        def key(e):
            return (0, 0) if e == 0 else (1, field.dlog(e))

        pts = []
        for x in sorted(field.elements, key=key):
            xq1 = field.pow(x, q + 1)
            for y in sorted(field.elements, key=key):
                if field.add(field.pow(y, q), y) == xq1:
                    pts.append((x, y))
        if len(pts) != q ** 3:
            raise VerificationError(
                f"found {len(pts)} points, expected q^3 = {q ** 3}")
        self.points = tuple(pts)
        self._codes = {}

    @property
    def n(self) -> int:
        return self.q ** 3

    def r_window(self) -> range:
        """The r interval on which the [q^3, r-g+1, q^3-r] formula applies."""
        return range(2 * self.genus, self.q ** 3 - self.q ** 2)

    def monomial_basis(self, r: int) -> tuple:
        """Exponent pairs (a, b) with a*q + b*(q+1) <= r and b <= q-1, ordered
        by pole order; a basis of the allowed function space."""
        if r < 0:
            raise ValueError("pole budget must be nonnegative")
        out = []
        for b in range(min(self.q - 1, r // (self.q + 1)) + 1):
            rest = r - b * (self.q + 1)
            for a in range(rest // self.q + 1):
                out.append((a * self.q + b * (self.q + 1), a, b))
        out.sort()
        return tuple((a, b) for _, a, b in out)

    def code(self, r: int) -> LinearCode:
        """Evaluation code with pole budget r; dimension is rank-verified
        against r - g + 1 inside the parameter window."""
        if r in self._codes:
            return self._codes[r]
        field = self.field
        basis = self.monomial_basis(r)
        rows = np.zeros((len(basis), self.n), dtype=np.int32)
        for i, (a, b) in enumerate(basis):
            for j, (x, y) in enumerate(self.points):
                rows[i, j] = field.mul(field.pow(x, a), field.pow(y, b))
        out = LinearCode(field, self.n, rows)
        if r in self.r_window() and out.k != r - self.genus + 1:
            raise VerificationError(
                f"rank {out.k} != r - g + 1 = {r - self.genus + 1} at r={r}")
        self._codes[r] = out
        return out

    def __repr__(self):
        return f"Hermitian curve over GF({self.q ** 2}), {self.n} points"


@lru_cache(maxsize=None)
def hermitian_curve(q: int) -> HermitianCurve:
    return HermitianCurve(q)


@dataclass(frozen=True)
class ProductVerdict:
    """Outcome of checking C_ri * C_rj against C_(ri+rj)."""

    ri: int
    rj: int
    inclusion: bool
    equality_expected: bool
    equality: bool


def product_check(curve: HermitianCurve, ri: int, rj: int) -> ProductVerdict:
    """C_ri * C_rj is always inside C_(ri+rj); equality holds once
    max(ri, rj) >= 2g+1 and min(ri, rj) >= 2g."""
    ci, cj, csum = curve.code(ri), curve.code(rj), curve.code(ri + rj)
    prod = ci.schur(cj)
    inclusion = csum.contains(prod)
    g = curve.genus
    hi, lo = max(ri, rj), min(ri, rj)
    expected = hi >= 2 * g + 1 and lo >= 2 * g
    equality = inclusion and prod == csum
    if expected and not equality:
        raise VerificationError(
            f"product equality failed at ri={ri}, rj={rj} (q={curve.q})")
    return ProductVerdict(ri, rj, inclusion, expected, equality)


def _check_window(curve: HermitianCurve, r: int, s: int):
    q = curve.q
    if s < 2 or 2 * s > q * q:
        raise ValueError(f"need 2 <= s <= q^2/2 = {q * q / 2:g}, got s={s}")
    if r < 2 * curve.genus + 1:
        raise ValueError(f"need r >= 2g+1 = {2 * curve.genus + 1}, got r={r}")
    if 2 * (r + s) > q ** 3 - q ** 2 + 1:
        raise ValueError(
            f"need r + s <= (q^3-q^2+1)/2 = {(q ** 3 - q ** 2 + 1) / 2:g}, "
            f"got {r + s}")


def _chain_spec(curve: HermitianCurve, r: int, s: int) -> mp.MatrixProductSpec:
    codes = [curve.code(r + s - 1 - i) for i in range(s)]
    return mp.vandermonde_spec(codes)


def build_c_rs(curve: HermitianCurve, r: int, s: int) -> mp.MatrixProductSpec:
    """[C_(r+s-1), C_(r+s-2), ..., C_r] with a Vandermonde defining matrix on
    all nonzero elements of GF(q^2): a nested chain, so the distance bound is
    exact."""
    _check_window(curve, r, s)
    return _chain_spec(curve, r, s)


def square_c_rs(curve: HermitianCurve, r: int, s: int,
                verify: bool | None = None) -> mp.MatrixProductSpec:
    """The square of build_c_rs(r, s), which collapses to the same family with
    doubled pole budget: the chain [C_(2r+2s-2), ..., C_(2r)] on V(2s-1).

    The window check applies to the original (r, s); it is precisely what
    keeps every constituent of the square inside the Hermitian parameter
    window.  verify=True additionally builds the square through the generic
    Vandermonde square rewrite and asserts canonical equality of the two
    codes.  Default: verify for q <= 3, skip for larger q (the q = 4 check
    runs row counts in the thousands and belongs to the slow tier).
    """
    _check_window(curve, r, s)
    spec = _chain_spec(curve, 2 * r, 2 * s - 1)
    if verify is None:
        verify = curve.q <= 3
    if verify:
        original = _chain_spec(curve, r, s)
        via_theorem = mp.square_vandermonde(original.constituents)
        if mp.build(via_theorem) != mp.build(spec):
            raise VerificationError(
                f"square mismatch at (r={r}, s={s}, q={curve.q})")
    return spec


def c_rs_params(q: int, r: int, s: int) -> tuple:
    """(n, k, d, k*, d*) for the nested Vandermonde-Hermitian family, from
    the closed forms; the two distance minimizations are re-evaluated
    term-by-term and must agree with the closed form."""
    g = q * (q - 1) // 2
    curve_window = _WindowOnly(q, g)
    _check_window(curve_window, r, s)
    n = q ** 5 - q ** 3
    k = s * (r - g) + s * (s + 1) // 2
    d = (q * q - s) * (q ** 3 - r)
    k_star = (2 * s - 1) * (2 * r - g + s)
    d_star = (q * q - 2 * s + 1) * (q ** 3 - 2 * r)

    terms = [(q * q - i - 1) * (q ** 3 - (r + s - 1 - i)) for i in range(s)]
    if min(terms) != d:
        raise VerificationError(f"distance identity failed for C({r},{s})")
    sq_terms = [(q * q - i - 1) * (q ** 3 - (2 * r + 2 * s - 2 - i))
                for i in range(2 * s - 1)]
    if min(sq_terms) != d_star or sq_terms[2 * s - 2] != d_star:
        raise VerificationError(f"square distance identity failed for C({r},{s})")
    return n, k, d, k_star, d_star


class _WindowOnly:
    """Just enough curve surface for the parameter-window check."""

    def __init__(self, q, genus):
        self.q = q
        self.genus = genus
