"""Exact arithmetic in GF(p^m), field extensions, and roots of unity.

An element of GF(p^m) is a plain ``int`` in ``range(p**m)``: the integer whose
base-p digits are the coefficients of its residue polynomial, lowest degree
first.  For p = 2 this is the usual bit-vector encoding, so addition is XOR.
Multiplication goes through discrete-log tables whenever the field has at most
2^16 elements (all fields used in practice); larger fields fall back to
polynomial multiplication.

The modulus for each (p, m) comes from a fixed built-in table, with a
deterministic lexicographic search as fallback, so that every derived object
(primitive element, roots of unity, minimal polynomials, generator
polynomials) is reproducible across runs.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import VerificationError

_TABLE_LIMIT = 1 << 16  # discrete-log tables only below this field size
_ADD_TABLE_LIMIT = 512  # full q x q addition table for small non-binary fields

# Monic irreducible moduli, coefficients low -> high.  All entries are
# primitive polynomials, so the canonical generator x (element p) is a
# primitive element, but primitivity is re-verified at construction.
_IRREDUCIBLE = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over the prime field GF(p), used only for modulus validation
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _pmul(p, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(p, a, f):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df])


def _ppowmod(p, a, e, f):
    result = [1]
    base = _pmod(p, a, f)
    while e:
        if e & 1:
            result = _pmod(p, _pmul(p, result, base), f)
        base = _pmod(p, _pmul(p, base, base), f)
        e >>= 1
    return result


def _pgcd(p, a, b):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(p, a, bm)
    return a


def _peval(p, f, x):
    y = 0
    for c in reversed(f):
        y = (y * x + c) % p
    return y


def _is_irreducible_poly(p: int, f) -> bool:
    f = _ptrim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for a in range(p):
        if _peval(p, f, a) == 0:
            return False
    if m <= 3:
        return True  # no roots <=> irreducible for degrees 2 and 3
    # Rabin's test: x^(p^m) = x mod f, and gcd(x^(p^(m/t)) - x, f) = 1 for
    # every prime t dividing m.
    frob = [0, 1]
    powers = []
    for _ in range(m):
        frob = _ppowmod(p, frob, p, f)
        powers.append(frob)
    final = list(powers[m - 1]) + [0, 0]
    final[1] = (final[1] - 1) % p
    if _ptrim(final):
        return False
    for t in _prime_factors(m):
        g = list(powers[m // t - 1]) + [0, 0]
        g[1] = (g[1] - 1) % p
        if len(_pgcd(p, g, f)) > 1:
            return False
    return True


def _find_irreducible(p: int, m: int):
    """Smallest monic irreducible of degree m, ordered by the integer whose
    base-p digits are the non-leading coefficients."""
    if m == 1:
        return (0, 1)
    for enc in range(p ** m):
        coeffs = []
        e = enc
        for _ in range(m):
            coeffs.append(e % p)
            e //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible_poly(p, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# the field itself
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^m) with a fixed irreducible modulus and primitive element.

    Immutable after construction; all operations are pure, so instances can be
    shared freely between threads.  Prefer :func:`make_field`, which caches
    one instance per (p, m).
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = _IRREDUCIBLE.get((p, m)) or _find_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not _is_irreducible_poly(p, modulus):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus

        self._pvec = np.array([p ** i for i in range(m)], dtype=np.int64)
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._exp = self._log = None
            self._neg_table = self._add_table = self._dig = None
            self.primitive = self._find_primitive_slow()

    # -- construction helpers ------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = [(a // int(pk)) % p for pk in self._pvec]
        db = [(b // int(pk)) % p for pk in self._pvec]
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % p
        out = 0
        for i in range(m - 1, -1, -1):
            out = out * p + prod[i]
        return out

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.primitive = 1
            self._exp = np.array([1, 1], dtype=np.int32)
            self._log = np.array([0, 0], dtype=np.int32)
        else:
            exp = np.zeros(2 * (q - 1), dtype=np.int32)
            log = np.zeros(q, dtype=np.int32)
            primitive = None
            for cand in range(2, q):
                val, ok = 1, True
                for i in range(q - 1):
                    if val == 1 and i > 0:
                        ok = False
                        break
                    exp[i] = val
                    log[val] = i
                    val = self._mul_poly(val, cand)
                if ok and val == 1:
                    primitive = cand
                    break
            if primitive is None:
                raise VerificationError(f"no primitive element in GF({q})")
            exp[q - 1:2 * (q - 1)] = exp[:q - 1]
            self.primitive = primitive
            self._exp, self._log = exp, log

        vals = np.arange(q, dtype=np.int64)
        dig = (vals[:, None] // self._pvec[None, :]) % self.p
        self._dig = dig.astype(np.int32)
        self._neg_table = (((self.p - dig) % self.p) @ self._pvec).astype(np.int32)
        if self.p != 2 and q <= _ADD_TABLE_LIMIT:
            s = (dig[:, None, :] + dig[None, :, :]) % self.p
            self._add_table = (s @ self._pvec).astype(np.int32)
        else:
            self._add_table = None

    def _find_primitive_slow(self):
        factors = _prime_factors(self.q - 1)
        for cand in range(2, self.q):
            if all(self.pow(cand, (self.q - 1) // f) != 1 for f in factors):
                return cand
        raise VerificationError(f"no primitive element in GF({self.q})")

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, shift = 0, 1
        for _ in range(self.m):
            out += ((a + b) % self.p) * shift
            a //= self.p
            b //= self.p
            shift *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg_table is not None:
            return int(self._neg_table[a])
        out, shift = 0, 1
        for _ in range(self.m):
            out += ((-a) % self.p) * shift
            a //= self.p
            shift *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._exp is not None:
            return int(self._exp[(self.q - 1 - int(self._log[a])) % (self.q - 1)])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        e %= self.q - 1
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def dlog(self, a: int) -> int:
        """Discrete log base the primitive element; requires a nonzero."""
        if a == 0:
            raise ValueError("0 has no discrete log")
        self._require_tables()
        return int(self._log[a])

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        if self._log is not None:
            return (self.q - 1) // math.gcd(self.q - 1, int(self._log[a]))
        n = self.q - 1
        for f in sorted(_prime_factors(n)):
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    # -- vectorized arithmetic (numpy int arrays of element codes) ------------

    def _require_tables(self):
        if self._exp is None:
            raise RuntimeError(
                f"GF({self.q}) is too large for table-backed vector arithmetic")

    def add_arr(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.p == 2:
            return a ^ b
        self._require_tables()
        if self._add_table is not None:
            return self._add_table[a, b]
        s = (self._dig[a] + self._dig[b]) % self.p
        return (s @ self._pvec).astype(np.int32)

    def neg_arr(self, a):
        if self.p == 2:
            return np.asarray(a)
        self._require_tables()
        return self._neg_table[np.asarray(a)]

    def sub_arr(self, a, b):
        if self.p == 2:
            return np.asarray(a) ^ np.asarray(b)
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        self._require_tables()
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- element representation ----------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Base-p coefficient vector of an element, lowest degree first."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + int(c) % self.p
        return out

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def units(self) -> range:
        return range(1, self.q)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "primitive": list(self.coeffs(self.primitive)),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteField":
        field = make_field(int(d["p"]), int(d["m"]), tuple(d["modulus"]))
        prim = field.from_coeffs(d.get("primitive", field.coeffs(field.primitive)))
        if prim != field.primitive:
            raise ValueError("descriptor primitive element does not match table")
        return field

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_field(p: int, m: int, modulus=None) -> FiniteField:
    """Cached field constructor; one instance per (p, m, modulus)."""
    return FiniteField(p, m, modulus)


@lru_cache(maxsize=None)
def field_from_order(q: int) -> FiniteField:
    """GF(q) for a prime power q, with the default modulus."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = min(f for f in _prime_factors(q))
    m = 0
    qq = q
    while qq % p == 0 and qq > 1:
        qq //= p
        m += 1
    if p ** m != q:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, m)


# ---------------------------------------------------------------------------
# polynomials over an arbitrary FiniteField (coefficient tuples, low -> high)
# ---------------------------------------------------------------------------

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(field, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim(field.add(x, y) for x, y in zip(a, b))


def poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return poly_trim(out)


def poly_divmod(field, a, b):
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(poly_trim(a))
    db, lead_inv = len(b) - 1, field.inv(b[-1])
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = field.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        quot[shift] = c
        for j in range(db + 1):
            a[shift + j] = field.sub(a[shift + j], field.mul(c, b[j]))
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(quot), poly_trim(a)


def poly_eval(field, c, x):
    y = 0
    for ci in reversed(c):
        y = field.add(field.mul(y, x), ci)
    return y


# ---------------------------------------------------------------------------
# extensions
# ---------------------------------------------------------------------------

class ExtensionEmbedding:
    """A field homomorphism GF(q) -> GF(q^r) with coordinate maps.

    The embedding sends the base field's canonical generator (the residue of
    x) to the smallest-encoded root of the base modulus inside the extension.
    ``coords`` writes an extension element in the basis {1, A, ..., A^(r-1)}
    over the embedded base field, where A is the extension's primitive
    element; ``lift`` is its inverse.
    """

    def __init__(self, base: FiniteField, ext: FiniteField):
        if ext.p != base.p or ext.m % base.m != 0:
            raise ValueError(f"{ext} is not an extension of {base}")
        self.base = base
        self.ext = ext
        self.r = ext.m // base.m

        if ext.q > _TABLE_LIMIT:
            raise RuntimeError(f"extension {ext} too large for embeddings")
        if ext == base and base.m > 1:
            root = base.p  # the canonical generator itself: identity embedding
        else:
            root = None
            for e in range(ext.q):
                if poly_eval(ext, base.modulus, e) == 0:
                    root = e
                    break
            if root is None:
                raise VerificationError(f"base modulus has no root in {ext}")
        self._gen_image = root
        self._gen_powers = [ext.pow(root, j) for j in range(base.m)]

        # change of basis: GF(p)-matrix whose columns are the p-digit vectors
        # of embed(x^j) * A^i
        p, em = base.p, ext.m
        alpha_pows = [ext.pow(ext.primitive, i) for i in range(self.r)]
        M = np.zeros((em, em), dtype=np.int64)
        for i in range(self.r):
            for j in range(base.m):
                col = i * base.m + j
                v = ext.mul(self._gen_powers[j], alpha_pows[i])
                M[:, col] = ext.coeffs(v)
        self._basis = alpha_pows
        self._minv = _inv_mod_p(M, p)

        self._verify()

    def embed(self, a: int) -> int:
        """Image of a base-field element in the extension."""
        out = 0
        for j, c in enumerate(self.base.coeffs(a)):
            if c:
                out = self.ext.add(out, self.ext.mul(c, self._gen_powers[j]))
        return out

    def coords(self, x: int) -> tuple:
        """Coordinates of x over the base field w.r.t. {A^i}."""
        v = (self._minv @ np.array(self.ext.coeffs(x), dtype=np.int64)) % self.base.p
        bm = self.base.m
        return tuple(self.base.from_coeffs(v[i * bm:(i + 1) * bm])
                     for i in range(self.r))

    def lift(self, coords) -> int:
        out = 0
        for i, c in enumerate(coords):
            out = self.ext.add(out, self.ext.mul(self.embed(c), self._basis[i]))
        return out

    def in_base_image(self, x: int):
        """The base element mapping to x, or None if x is outside the image."""
        c = self.coords(x)
        if any(c[1:]):
            return None
        return c[0]

    def _verify(self):
        base, sample = self.base, range(self.base.q)
        if base.q > 64:
            sample = list(range(8)) + [base.primitive, base.q - 1]
        for a in sample:
            for b in sample:
                if self.embed(base.add(a, b)) != self.ext.add(self.embed(a), self.embed(b)):
                    raise VerificationError("embedding is not additive")
                if self.embed(base.mul(a, b)) != self.ext.mul(self.embed(a), self.embed(b)):
                    raise VerificationError("embedding is not multiplicative")
        if self.embed(1) != 1:
            raise VerificationError("embedding does not fix 1")

    def __repr__(self):
        return f"{self.base} -> {self.ext}"


def _inv_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    n = M.shape[0]
    A = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1)
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, n):
            if A[i, col] % p:
                piv = i
                break
        if piv is None:
            raise VerificationError("basis matrix is singular mod p")
        A[[row, piv]] = A[[piv, row]]
        A[row] = (A[row] * pow(int(A[row, col]), -1, p)) % p
        for i in range(n):
            if i != row and A[i, col]:
                A[i] = (A[i] - A[i, col] * A[row]) % p
        row += 1
    return A[:, n:]


@lru_cache(maxsize=None)
def get_embedding(base: FiniteField, ext: FiniteField) -> ExtensionEmbedding:
    return ExtensionEmbedding(base, ext)


@lru_cache(maxsize=None)
def nth_root_of_unity(base: FiniteField, n: int):
    """Smallest extension GF(q^r) containing a primitive n-th root of unity,
    together with the root beta = A^((q^r-1)/n) for the extension's primitive
    element A.

    Returns (embedding, beta).  Requires gcd(n, q) = 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if math.gcd(n, base.q) != 1:
        raise ValueError(f"gcd(n, q) must be 1, got n={n}, q={base.q}")
    if n == 1:
        return get_embedding(base, base), 1
    r, t = 1, base.q % n
    while t != 1:
        t = (t * base.q) % n
        r += 1
    ext = base if r == 1 else make_field(base.p, base.m * r)
    emb = get_embedding(base, ext)
    beta = ext.pow(ext.primitive, (ext.q - 1) // n)
    if ext.pow(beta, n) != 1:
        raise VerificationError("root of unity has wrong order")
    for f in _prime_factors(n):
        if ext.pow(beta, n // f) == 1:
            raise VerificationError("root of unity has wrong order")
    return emb, beta


def minimal_polynomial(x: int, emb: ExtensionEmbedding) -> tuple:
    """Monic minimal polynomial over the base field of an extension element.

    Computed as the product of (X - y) over the Frobenius orbit of x; every
    coefficient must descend to the base field, else the embedding is broken
    and a VerificationError is raised.
    """
    ext, q = emb.ext, emb.base.q
    orbit = [x]
    y = ext.pow(x, q)
    while y != x:
        orbit.append(y)
        y = ext.pow(y, q)
    poly = (1,)
    for y in orbit:
        poly = poly_mul(ext, poly, (ext.neg(y), 1))
    down = []
    for c in poly:
        b = emb.in_base_image(c)
        if b is None:
            raise VerificationError(
                f"minimal polynomial coefficient {c} does not lie in {emb.base}")
        down.append(b)
    return tuple(down)
