"""Cyclic codes through q-cyclotomic cosets.

A cyclic code of length n over GF(q) (gcd(n, q) = 1) is determined by its
generating set I, the union of q-cyclotomic cosets mod n at which the
generator polynomial does NOT vanish.  Dimension is |I|, the amplitude of I
gives a BCH-style distance bound, and sums/Schur products of cyclic codes
reduce to set unions/sumsets of generating sets.  All of that happens in
plain integer-set arithmetic; the linear-algebra materialization is lazy and
only needed for cross-checks and small instances.

Also provides s-restricted weights of residues, the weight-bounded coset
unions built from them, and the extension-field evaluation codes used as an
independent oracle for the coset arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .codes import LinearCode
from .errors import VerificationError
from .galois import (FiniteField, field_from_order, minimal_polynomial,
                     nth_root_of_unity, poly_mul)
from . import linalg


@dataclass(frozen=True)
class CosetSet:
    """A union of q-cyclotomic cosets modulo n."""

    q: int
    n: int
    elems: frozenset

    def __post_init__(self):
        if math.gcd(self.n, self.q) != 1:
            raise ValueError(f"gcd(n, q) must be 1, got n={self.n}, q={self.q}")
        object.__setattr__(self, "elems", frozenset(int(e) % self.n for e in self.elems))
        for e in self.elems:
            if (e * self.q) % self.n not in self.elems:
                raise ValueError(
                    f"{set(self.elems)} is not closed under multiplication by "
                    f"{self.q} mod {self.n}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def coset(cls, q: int, n: int, a: int) -> "CosetSet":
        """The single coset [a] = {a q^j mod n}."""
        if math.gcd(n, q) != 1:
            raise ValueError(f"gcd(n, q) must be 1, got n={n}, q={q}")
        a %= n
        orbit = {a}
        b = (a * q) % n
        while b != a:
            orbit.add(b)
            b = (b * q) % n
        return cls(q, n, frozenset(orbit))

    @classmethod
    def from_reps(cls, q: int, n: int, reps) -> "CosetSet":
        elems = frozenset()
        for a in reps:
            elems |= cls.coset(q, n, a).elems
        return cls(q, n, elems)

    @classmethod
    def full(cls, q: int, n: int) -> "CosetSet":
        return cls(q, n, frozenset(range(n)))

    @classmethod
    def empty(cls, q: int, n: int) -> "CosetSet":
        return cls(q, n, frozenset())

    # -- set structure -------------------------------------------------------

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(sorted(self.elems))

    def __contains__(self, x):
        return int(x) % self.n in self.elems

    def _check(self, other):
        if (other.q, other.n) != (self.q, self.n):
            raise ValueError("coset sets live over different (q, n)")

    def __or__(self, other: "CosetSet") -> "CosetSet":
        self._check(other)
        return CosetSet(self.q, self.n, self.elems | other.elems)

    def __le__(self, other: "CosetSet") -> bool:
        self._check(other)
        return self.elems <= other.elems

    def sumset(self, other: "CosetSet") -> "CosetSet":
        """{a + b mod n}; the coset-arithmetic image of a Schur product."""
        self._check(other)
        if not self.elems or not other.elems:
            return CosetSet(self.q, self.n, frozenset())
        a = np.fromiter(self.elems, dtype=np.int64)
        b = np.fromiter(other.elems, dtype=np.int64)
        sums = np.unique((a[:, None] + b[None, :]) % self.n)
        return CosetSet(self.q, self.n, frozenset(int(x) for x in sums))

    __add__ = sumset

    def neg(self) -> "CosetSet":
        return CosetSet(self.q, self.n, frozenset((-e) % self.n for e in self.elems))

    def complement(self) -> "CosetSet":
        return CosetSet(self.q, self.n, frozenset(range(self.n)) - self.elems)

    def reps(self) -> tuple:
        """Smallest element of each coset, ascending."""
        seen, out = set(), []
        for e in sorted(self.elems):
            if e not in seen:
                out.append(e)
                seen |= CosetSet.coset(self.q, self.n, e).elems
        return tuple(out)

    # -- window statistics ---------------------------------------------------

    def amplitude(self) -> int:
        return amplitude(self.elems, self.n)

    def amplitude_upper(self) -> int:
        return amplitude_upper(self.elems)

    def largest_consecutive_run(self) -> int:
        return largest_consecutive_run(self.elems, self.n)

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "elems": sorted(self.elems)}

    @classmethod
    def from_dict(cls, d: dict) -> "CosetSet":
        return cls(int(d["q"]), int(d["n"]), frozenset(d["elems"]))


def amplitude(elems, n: int) -> int:
    """Length of the shortest cyclic window {c, ..., c+i-1} covering the set
    of residues: n minus the largest cyclic gap between consecutive elements.

    Defined for any nonempty subset of Z/nZ, coset-closed or not.
    """
    e = sorted(int(x) % n for x in elems)
    if not e:
        raise ValueError("amplitude of the empty set is undefined")
    if len(e) == 1:
        return 1
    gaps = [e[i + 1] - e[i] for i in range(len(e) - 1)]
    gaps.append(e[0] + n - e[-1])
    return n - max(gaps) + 1


def amplitude_upper(elems) -> int:
    """The cruder reading: the window {0, ..., max} always covers."""
    elems = list(elems)
    if not elems:
        raise ValueError("amplitude of the empty set is undefined")
    return max(elems) + 1


def largest_consecutive_run(elems, n: int) -> int:
    """Longest run of cyclically consecutive residues inside the set."""
    e = sorted(set(int(x) % n for x in elems))
    if not e:
        return 0
    if len(e) == n:
        return n
    runs, current = [], 1
    for i in range(1, len(e)):
        if e[i] == e[i - 1] + 1:
            current += 1
        else:
            runs.append(current)
            current = 1
    runs.append(current)
    if e[0] == 0 and e[-1] == n - 1 and len(runs) > 1:
        runs[0] += runs.pop()
    return max(runs)


def bch_bound(I: CosetSet, amplitude_reading: str = "exact") -> int:
    """The distance bound n - Amp(I) + 1 attached to C(I)."""
    amp = I.amplitude() if amplitude_reading == "exact" else I.amplitude_upper()
    return I.n - amp + 1


# ---------------------------------------------------------------------------
# the codes themselves
# ---------------------------------------------------------------------------

class CyclicCode:
    """Handle for the cyclic code C(I); materialization is lazy and cached.

    Dimension and distance-bound queries run on the generating set alone, so
    handles stay cheap even at lengths where the generator matrix would be
    large.
    """

    def __init__(self, I: CosetSet):
        self.I = I
        self.n = I.n
        self.field = field_from_order(I.q)
        if self.field.q != I.q:
            raise ValueError(f"{I.q} is not a prime power")

    @classmethod
    def from_reps(cls, q, n, reps):
        return cls(CosetSet.from_reps(q, n, reps))

    @property
    def q(self):
        return self.I.q

    @cached_property
    def J(self) -> CosetSet:
        """Defining set: the complement of the generating set."""
        return self.I.complement()

    @property
    def dim(self) -> int:
        return len(self.I)

    def distance_bound(self, amplitude_reading: str = "exact"):
        """BCH-style bound n - Amp(I) + 1; infinity for the zero code."""
        if not self.I.elems:
            return math.inf
        return bch_bound(self.I, amplitude_reading)

    @cached_property
    def _root(self):
        return nth_root_of_unity(self.field, self.n)

    @cached_property
    def generator_poly(self) -> tuple:
        """g = prod over J of (x - beta^j), coefficients over GF(q), built as
        the product of the minimal polynomials of the beta^j grouped by coset.
        Degree |J| by construction; the coefficient descent is verified."""
        emb, beta = self._root
        g = (1,)
        for rep in self.J.reps():
            mp = minimal_polynomial(emb.ext.pow(beta, rep), emb)
            g = poly_mul(self.field, g, mp)
        if len(g) - 1 != len(self.J):
            raise VerificationError(
                f"generator degree {len(g) - 1} != |J| = {len(self.J)}")
        return g

    @cached_property
    def code(self) -> LinearCode:
        """The materialized [n, |I|] linear code (cyclic shifts of g)."""
        g = self.generator_poly
        k = self.dim
        rows = np.zeros((k, self.n), dtype=np.int32)
        for i in range(k):
            rows[i, i:i + len(g)] = g
        out = LinearCode(self.field, self.n, rows)
        if out.k != k:
            raise VerificationError(f"materialized rank {out.k} != |I| = {k}")
        return out

    def dual(self) -> "CyclicCode":
        """C(I)^perp = C(-J)."""
        return CyclicCode(self.J.neg())

    def schur(self, other: "CyclicCode") -> "CyclicCode":
        """C(I1) * C(I2) = C(I1 + I2), by coset arithmetic alone."""
        return CyclicCode(self.I.sumset(other.I))

    __mul__ = schur

    def __add__(self, other: "CyclicCode") -> "CyclicCode":
        """C(I1) + C(I2) = C(I1 union I2)."""
        return CyclicCode(self.I | other.I)

    def __eq__(self, other):
        return isinstance(other, CyclicCode) and self.I == other.I

    def __hash__(self):
        return hash(self.I)

    def __repr__(self):
        return f"C(I) = [{self.n},{self.dim},>={self.distance_bound()}]_{self.q} cyclic"


# ---------------------------------------------------------------------------
# s-restricted weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RestrictedWeightConfig:
    """Parameters (q, r, s, m) for the weight-m threshold sets W."""

    q: int
    r: int
    s: int
    m: int

    def __post_init__(self):
        if self.s < 1 or self.s > self.r:
            raise ValueError(f"need 1 <= s <= r, got s={self.s}, r={self.r}")
        if not 0 <= self.m <= self.s * (self.q - 1):
            raise ValueError(
                f"need 0 <= m <= s(q-1) = {self.s * (self.q - 1)}, got m={self.m}")

    @property
    def n(self) -> int:
        return self.q ** self.r - 1


def restricted_weight(cfg: RestrictedWeightConfig, t: int) -> int:
    """Largest digit sum over cyclic length-s windows of t's q-ary digits.

    Digit indices are read cyclically mod r, which is what makes the weight
    constant on cyclotomic cosets (multiplication by q rotates the digits).
    """
    if not 0 <= t <= cfg.n - 1:
        raise ValueError(f"t must lie in [0, {cfg.n - 1}], got {t}")
    digits = []
    for _ in range(cfg.r):
        digits.append(t % cfg.q)
        t //= cfg.q
    best = 0
    for i in range(cfg.r):
        w = sum(digits[(i + j) % cfg.r] for j in range(cfg.s))
        if w > best:
            best = w
    return best


def restricted_weight_set(cfg: RestrictedWeightConfig) -> CosetSet:
    """W = {t : weight(t) <= m}, a union of cosets mod q^r - 1."""
    elems = frozenset(t for t in range(cfg.n)
                      if restricted_weight(cfg, t) <= cfg.m)
    return CosetSet(cfg.q, cfg.n, elems)


def dual_distance_bound_W(cfg: RestrictedWeightConfig):
    """Lower bound on d(C(W)^perp): one plus the longest consecutive run in W.

    For q = 2 the run is verified to be exactly {0, ..., 2^(m+1) - 2}, giving
    the bound 2^(m+1); a mismatch raises rather than silently using the wrong
    run.  Returns infinity when W is everything (dual is the zero code).
    """
    W = restricted_weight_set(cfg)
    if len(W) == W.n:
        return math.inf
    run = W.largest_consecutive_run()
    if cfg.q == 2:
        expected = 2 ** (cfg.m + 1) - 1
        if run != expected or not all(t in W for t in range(expected)):
            raise VerificationError(
                f"consecutive run in W is {run}, expected {expected}")
    return run + 1


# ---------------------------------------------------------------------------
# evaluation-code oracle
# ---------------------------------------------------------------------------

def eval_code(q: int, n: int, exponents) -> LinearCode:
    """B(M): the span over GF(q^r) of the vectors (beta^(i*j))_j for i in M,
    where beta is the fixed primitive n-th root of unity."""
    base = field_from_order(q)
    emb, beta = nth_root_of_unity(base, n)
    ext = emb.ext
    rows = []
    for i in exponents:
        step = ext.pow(beta, int(i) % n)
        row, val = [], 1
        for _ in range(n):
            row.append(val)
            val = ext.mul(val, step)
        rows.append(row)
    return LinearCode(ext, n, rows)


def subfield_subcode(code: LinearCode, base: FiniteField) -> LinearCode:
    """The base-field vectors lying in an extension-field code.

    Each parity-check entry is expanded into its coordinate vector over the
    base field; the subcode is the kernel of the stacked system over GF(q).
    """
    from .galois import get_embedding
    ext = code.field
    if ext == base:
        return code
    emb = get_embedding(base, ext)
    H = code.dual().gen
    if H.shape[0] == 0:
        return LinearCode.full(base, code.n)
    expanded = np.zeros((H.shape[0] * emb.r, code.n), dtype=np.int32)
    for i in range(H.shape[0]):
        for j in range(code.n):
            for t, c in enumerate(emb.coords(int(H[i, j]))):
                expanded[i * emb.r + t, j] = c
    return LinearCode(base, code.n, linalg.kernel(base, expanded))
