"""Linear codes over GF(q) as canonical generator matrices.

A code is stored as the reduced row echelon form of its generators with zero
rows removed, so two codes are equal exactly when they are equal as
subspaces.  Supports sums, duals, component-wise (Schur) products and
squares, and exact minimum distance by codeword enumeration up to a caller
controlled budget.
"""

from __future__ import annotations

import math

import numpy as np

from . import linalg
from .errors import BudgetExceeded
from .galois import FiniteField, field_from_order

DEFAULT_BUDGET = 1 << 26
_CHUNK_ENTRIES = 1 << 22  # max entries of an enumeration chunk


class LinearCode:
    """An [n, k] linear code over a finite field, canonically represented."""

    __slots__ = ("field", "n", "gen", "k")

    def __init__(self, field: FiniteField, n: int, rows=None):
        if n < 0:
            raise ValueError("length must be nonnegative")
        self.field = field
        self.n = n
        M = linalg.as_matrix(field, [] if rows is None else rows, cols=n)
        R, pivots = linalg.rref(field, M)
        gen = R[:len(pivots)].copy()
        gen.flags.writeable = False
        self.gen = gen
        self.k = len(pivots)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, np.eye(n, dtype=np.int32))

    @classmethod
    def repetition(cls, field, n):
        return cls(field, n, np.ones((1, n), dtype=np.int32))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LinearCode)
                and self.field == other.field and self.n == other.n
                and self.k == other.k and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.field, self.n, self.gen.tobytes()))

    def __repr__(self):
        return f"[{self.n},{self.k}]_{self.field.q} code"

    def _check_compatible(self, other):
        if other.field != self.field:
            raise ValueError("codes are over different fields")
        if other.n != self.n:
            raise ValueError(f"lengths differ: {self.n} vs {other.n}")

    # -- subspace relations --------------------------------------------------

    def contains_word(self, v) -> bool:
        v = linalg.as_matrix(self.field, [v], cols=self.n)
        return linalg.rank(self.field, np.vstack([self.gen, v])) == self.k

    def contains(self, other: "LinearCode") -> bool:
        self._check_compatible(other)
        if other.k > self.k:
            return False
        stacked = np.vstack([self.gen, other.gen])
        return linalg.rank(self.field, stacked) == self.k

    # -- the code operations ---------------------------------------------------

    def __add__(self, other: "LinearCode") -> "LinearCode":
        """Smallest linear code containing both summands."""
        self._check_compatible(other)
        return LinearCode(self.field, self.n, np.vstack([self.gen, other.gen]))

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, linalg.kernel(self.field, self.gen))

    def schur(self, other: "LinearCode") -> "LinearCode":
        """Component-wise product span; k*k' generator products suffice."""
        self._check_compatible(other)
        if self.k == 0 or other.k == 0:
            return LinearCode.zero(self.field, self.n)
        if other is self or other == self:
            return self.square()
        prods = self.field.mul_arr(self.gen[:, None, :], other.gen[None, :, :])
        return LinearCode(self.field, self.n, prods.reshape(-1, self.n))

    __mul__ = schur

    def square(self) -> "LinearCode":
        """Schur square; only the k(k+1)/2 unordered row pairs are spanned."""
        if self.k == 0:
            return LinearCode.zero(self.field, self.n)
        iu, ju = np.triu_indices(self.k)
        prods = self.field.mul_arr(self.gen[iu], self.gen[ju])
        return LinearCode(self.field, self.n, prods)

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        """Exact minimum Hamming weight over all nonzero codewords.

        Raises BudgetExceeded when the full enumeration would visit more than
        ``budget`` codewords; callers must then fall back to bounds.
        """
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codeword")
        total = self.field.q ** self.k
        if total > budget:
            raise BudgetExceeded(
                f"enumerating {self.field.q}^{self.k} codewords exceeds budget {budget}")
        if self.field.q == 2:
            return self._min_distance_gf2()
        return self._min_distance_generic()

    def _min_distance_generic(self) -> int:
        q, n = self.field.q, max(self.n, 1)
        k0 = 1
        while k0 < self.k and (q ** (k0 + 1)) * n <= _CHUNK_ENTRIES:
            k0 += 1
        inner = _span_table(self.field, self.gen[:k0])
        best = n + 1
        for msg in _messages(q, self.k - k0):
            if any(msg):
                outer = np.zeros(self.n, dtype=np.int32)
                for c, row in zip(msg, self.gen[k0:]):
                    if c:
                        outer = self.field.add_arr(
                            outer, self.field.mul_arr(np.int32(c), row))
                chunk = self.field.add_arr(inner, outer[None, :])
            else:
                chunk = inner
            w = np.count_nonzero(chunk, axis=1)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
        return best

    def _min_distance_gf2(self) -> int:
        # byte-packed codeword chunks + vectorized popcount
        packed_rows = np.packbits(self.gen.astype(np.uint8), axis=1)
        nbytes = packed_rows.shape[1]
        k0 = 1
        while k0 < self.k and (1 << (k0 + 1)) * nbytes <= _CHUNK_ENTRIES:
            k0 += 1
        inner = np.zeros((1, nbytes), dtype=np.uint8)
        for row in packed_rows[:k0]:
            inner = np.vstack([inner, inner ^ row])
        best = self.n + 1
        for msg in _messages(2, self.k - k0):
            outer = np.zeros(nbytes, dtype=np.uint8)
            for c, row in zip(msg, packed_rows[k0:]):
                if c:
                    outer ^= row
            chunk = inner ^ outer[None, :] if any(msg) else inner
            w = np.bitwise_count(chunk).sum(axis=1, dtype=np.int64)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
        return best

    def words(self):
        """Iterate over all codewords (small codes only)."""
        if self.field.q ** self.k > _CHUNK_ENTRIES:
            raise BudgetExceeded("too many codewords to iterate")
        yield from _span_table(self.field, self.gen)

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "generators": [[int(x) for x in row] for row in self.gen],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        field = FiniteField.from_dict(d["field"])
        return cls(field, int(d["n"]), d["generators"])

    def to_text(self) -> str:
        """One row per line; entries are discrete logs of the entries with
        respect to the field's primitive element, '-' for zero."""
        lines = []
        for row in self.gen:
            parts = ["-" if int(x) == 0 else str(self.field.dlog(int(x)))
                     for x in row]
            lines.append(" ".join(parts))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, field, text: str) -> "LinearCode":
        rows = []
        for line in text.strip().splitlines():
            parts = line.split()
            rows.append([0 if p == "-" else field.pow(field.primitive, int(p))
                         for p in parts])
        if not rows:
            raise ValueError("empty generator text")
        return cls(field, len(rows[0]), rows)


def _messages(q, k):
    """All q^k coefficient tuples, odometer order."""
    if k == 0:
        yield ()
        return
    msg = [0] * k
    while True:
        yield tuple(msg)
        i = 0
        while i < k:
            msg[i] += 1
            if msg[i] < q:
                break
            msg[i] = 0
            i += 1
        if i == k:
            return


def _span_table(field, gen) -> np.ndarray:
    """All linear combinations of the given rows, as a (q^k, n) array."""
    n = gen.shape[1]
    table = np.zeros((1, n), dtype=np.int32)
    for row in gen:
        parts = [table]
        for c in range(1, field.q):
            parts.append(field.add_arr(table, field.mul_arr(np.int32(c), row)[None, :]))
        table = np.concatenate(parts, axis=0)
    return table


def sum_codes(codes) -> LinearCode:
    """Span of the union of several codes of the same field and length."""
    codes = list(codes)
    if not codes:
        raise ValueError("need at least one code")
    first = codes[0]
    for c in codes[1:]:
        first._check_compatible(c)
    gens = np.vstack([c.gen for c in codes])
    return LinearCode(first.field, first.n, gens)


def min_distance_or_inf(code: LinearCode, budget: int = DEFAULT_BUDGET):
    """Exact distance, with the zero-code convention d({0}) = infinity."""
    if code.k == 0:
        return math.inf
    return code.min_distance(budget)


def singleton_square_bound(n: int, k: int) -> int:
    """Upper bound max{1, n-2k+2} on the minimum distance of a square."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return max(1, n - 2 * k + 2)


def random_code(field, n, k_rows, rng) -> LinearCode:
    """Span of k_rows uniformly random vectors (dimension may come out lower)."""
    rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k_rows)]
    return LinearCode(field, n, rows)


def random_subcode(code: LinearCode, k_rows, rng) -> LinearCode:
    """Span of k_rows random combinations of the given code's generators."""
    if code.k == 0:
        return code
    rows = []
    for _ in range(k_rows):
        coeffs = np.array([rng.randrange(code.field.q) for _ in range(code.k)],
                          dtype=np.int32)
        acc = np.zeros(code.n, dtype=np.int32)
        for c, row in zip(coeffs, code.gen):
            if c:
                acc = code.field.add_arr(acc, code.field.mul_arr(np.int32(int(c)), row))
        rows.append(acc)
    return LinearCode(code.field, code.n, rows)


def code_from_order(q: int, n: int, rows=None) -> LinearCode:
    return LinearCode(field_from_order(q), n, rows)
