"""Dense linear algebra over a finite field.

Matrices are numpy int32 arrays of element codes; every function takes the
field explicitly.  Row reduction is plain Gaussian elimination with
table-backed vectorized row operations, which is fast enough for everything
this package does (the largest instances are a few thousand rows by ~1000
columns).
"""

from __future__ import annotations

import numpy as np


def as_matrix(field, rows, cols=None) -> np.ndarray:
    """Validate and normalize input into a 2D int32 matrix over the field."""
    M = np.array(rows, dtype=np.int32)
    if M.size == 0:
        M = M.reshape(0, cols if cols is not None else 0)
    if M.ndim != 2:
        raise ValueError(f"expected a 2D matrix, got shape {M.shape}")
    if cols is not None and M.shape[1] != cols:
        raise ValueError(f"expected {cols} columns, got {M.shape[1]}")
    if M.size and (M.min() < 0 or M.max() >= field.q):
        raise ValueError(f"matrix entries must be element codes in [0, {field.q})")
    return M


def rref(field, M: np.ndarray):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = np.array(M, dtype=np.int32)
    rows, cols = R.shape
    pivots = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        nz = np.nonzero(R[pr:, c])[0]
        if nz.size == 0:
            continue
        i = pr + int(nz[0])
        if i != pr:
            R[[pr, i]] = R[[i, pr]]
        pivot = int(R[pr, c])
        if pivot != 1:
            R[pr] = field.mul_arr(np.int32(field.inv(pivot)), R[pr])
        factors = R[:, c].copy()
        factors[pr] = 0
        mask = factors != 0
        if mask.any():
            prod = field.mul_arr(factors[mask, None], R[pr][None, :])
            R[mask] = field.sub_arr(R[mask], prod)
        pivots.append(c)
        pr += 1
    return R, tuple(pivots)


def rank(field, M: np.ndarray) -> int:
    return len(rref(field, M)[1])


def kernel(field, M: np.ndarray) -> np.ndarray:
    """Canonical (RREF) basis of the right null space {v : M v^T = 0}."""
    cols = M.shape[1]
    R, pivots = rref(field, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int32)
    for idx, f in enumerate(free):
        K[idx, f] = 1
        for row, pc in enumerate(pivots):
            K[idx, pc] = field.neg(int(R[row, f]))
    return rref(field, K)[0]


def matmul(field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int32)
    for k in range(A.shape[1]):
        out = field.add_arr(out, field.mul_arr(A[:, k:k + 1], B[k:k + 1, :]))
    return out


def inverse(field, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    if A.shape[1] != n:
        raise ValueError("only square matrices can be inverted")
    aug = np.concatenate([A, np.eye(n, dtype=np.int32)], axis=1)
    R, pivots = rref(field, aug)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


class GFMatrix:
    """A dense matrix over a finite field with canonical row reduction."""

    __slots__ = ("field", "a")

    def __init__(self, field, rows, cols=None):
        self.field = field
        a = as_matrix(field, rows, cols)
        a.flags.writeable = False
        self.a = a

    @property
    def shape(self):
        return self.a.shape

    def rref(self) -> "GFMatrix":
        return GFMatrix(self.field, rref(self.field, self.a)[0])

    @property
    def rank(self) -> int:
        return rank(self.field, self.a)

    def kernel(self) -> "GFMatrix":
        return GFMatrix(self.field, kernel(self.field, self.a))

    def inv(self) -> "GFMatrix":
        return GFMatrix(self.field, inverse(self.field, self.a))

    @property
    def T(self) -> "GFMatrix":
        return GFMatrix(self.field, self.a.T.copy())

    def mm(self, other: "GFMatrix") -> "GFMatrix":
        if other.field != self.field:
            raise ValueError("fields differ")
        return GFMatrix(self.field, matmul(self.field, self.a, other.a))

    def to_lists(self):
        return [[int(x) for x in row] for row in self.a]

    def to_text(self) -> str:
        """Aligned integer table, one matrix row per line."""
        if self.a.size == 0:
            return ""
        width = max(len(str(int(x))) for x in self.a.flat)
        return "\n".join(" ".join(str(int(x)).rjust(width) for x in row)
                         for row in self.a)

    def __eq__(self, other):
        return (isinstance(other, GFMatrix) and other.field == self.field
                and np.array_equal(other.a, self.a))

    def __hash__(self):
        return hash((self.field, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"GFMatrix({self.field}, {self.shape[0]}x{self.shape[1]})"
