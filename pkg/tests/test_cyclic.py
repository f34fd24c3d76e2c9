import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurmp.codes import LinearCode
from schurmp.cyclic import (CosetSet, CyclicCode, RestrictedWeightConfig,
                            amplitude, amplitude_upper, bch_bound, eval_code,
                            dual_distance_bound_W, largest_consecutive_run,
                            restricted_weight, restricted_weight_set,
                            subfield_subcode)
from schurmp.galois import make_field, poly_divmod

F2 = make_field(2, 1)


def window_scan_amplitude(elems, n):
    """Oracle: try every window start and every length explicitly."""
    elems = {e % n for e in elems}
    for i in range(1, n + 1):
        for c in range(n):
            window = {(c + d) % n for d in range(i)}
            if elems <= window:
                return i
    raise AssertionError


def all_coset_closed(q, n):
    reps = CosetSet.full(q, n).reps()
    cosets = [CosetSet.coset(q, n, a) for a in reps]
    out = []
    for bits in itertools.product([0, 1], repeat=len(cosets)):
        e = frozenset()
        for b, c in zip(bits, cosets):
            if b:
                e |= c.elems
        out.append(CosetSet(q, n, e))
    return out


# ---------------------------------------------------------------------------
# coset sets
# ---------------------------------------------------------------------------

def test_coset_examples():
    assert sorted(CosetSet.coset(2, 7, 1).elems) == [1, 2, 4]
    assert sorted(CosetSet.coset(2, 7, 0).elems) == [0]
    assert sorted(CosetSet.coset(2, 15, 5).elems) == [5, 10]


def test_coset_requires_coprime():
    with pytest.raises(ValueError):
        CosetSet.coset(2, 8, 1)
    with pytest.raises(ValueError):
        CosetSet(3, 9, frozenset())


def test_closure_is_enforced():
    with pytest.raises(ValueError):
        CosetSet(2, 7, frozenset({1}))  # 2 missing


def test_sumset_examples():
    I = CosetSet.coset(2, 7, 1)
    zero = CosetSet.coset(2, 7, 0)
    assert I.sumset(zero) == I
    assert sorted(I.sumset(I).elems) == [1, 2, 3, 4, 5, 6]


def test_sumset_is_coset_closed():
    rng = random.Random(0)
    for _ in range(20):
        n = rng.choice([15, 31])
        reps = CosetSet.full(2, n).reps()
        I1 = CosetSet.from_reps(2, n, [a for a in reps if rng.random() < 0.5] or [0])
        I2 = CosetSet.from_reps(2, n, [a for a in reps if rng.random() < 0.5] or [0])
        S = I1.sumset(I2)  # constructor re-checks closure
        assert all((e * 2) % n in S.elems for e in S.elems)


def test_amplitude_examples():
    assert amplitude(range(7), 7) == 7
    assert amplitude({6, 0}, 7) == 2
    assert amplitude({1, 2, 4}, 7) == 4
    assert amplitude({3}, 11) == 1
    with pytest.raises(ValueError):
        amplitude(set(), 5)
    assert amplitude_upper({1, 2, 4}) == 5


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_amplitude_matches_window_scan(data):
    n = data.draw(st.integers(min_value=2, max_value=12))
    elems = data.draw(st.sets(st.integers(min_value=0, max_value=n - 1),
                              min_size=1, max_size=n))
    assert amplitude(elems, n) == window_scan_amplitude(elems, n)


def test_largest_consecutive_run():
    assert largest_consecutive_run({0, 1, 2, 5}, 8) == 3
    assert largest_consecutive_run({6, 7, 0, 3}, 8) == 3  # wraps
    assert largest_consecutive_run(range(5), 5) == 5
    assert largest_consecutive_run(set(), 5) == 0


def test_coset_set_serialization():
    I = CosetSet.coset(2, 15, 3)
    assert CosetSet.from_dict(I.to_dict()) == I


# ---------------------------------------------------------------------------
# cyclic codes
# ---------------------------------------------------------------------------

def test_full_generating_set_gives_full_space():
    h = CyclicCode(CosetSet.full(2, 7))
    assert h.generator_poly == (1,)
    assert h.code == LinearCode.full(F2, 7)


def test_hamming_code_from_cosets():
    h = CyclicCode.from_reps(2, 7, [0, 1])
    assert h.dim == 4
    assert h.distance_bound() == 3  # Amp({0,1,2,4}) = 5
    assert h.code.min_distance() == 3
    assert h.code.square().k == 7


def test_dimension_is_coset_cardinality_exhaustive():
    for n in (7, 15):
        for I in all_coset_closed(2, n):
            h = CyclicCode(I)
            assert h.code.k == len(I)


def test_generator_poly_divides_xn_minus_1():
    for n in (7, 15):
        xn1 = tuple([1] + [0] * (n - 1) + [1])
        for I in all_coset_closed(2, n):
            g = CyclicCode(I).generator_poly
            _, rem = poly_divmod(F2, xn1, g)
            assert rem == ()


def test_bch_bound_holds_exhaustively():
    for n in (7, 15):
        for I in all_coset_closed(2, n):
            if not I.elems:
                continue
            h = CyclicCode(I)
            d = h.code.min_distance()
            assert d >= bch_bound(I)
            assert bch_bound(I) >= bch_bound(I, "max")


def test_dual_handle():
    full = CyclicCode(CosetSet.full(2, 7))
    assert full.dual().dim == 0
    ham = CyclicCode.from_reps(2, 7, [0, 1])
    dual = ham.dual()
    assert dual.dim == 3
    assert dual.code == ham.code.dual()


def test_dual_distance_exceeds_consecutive_run():
    for n in (7, 15):
        for I in all_coset_closed(2, n):
            if not I.elems or len(I) == n:
                continue
            run = I.largest_consecutive_run()
            d_dual = CyclicCode(I).dual().code.min_distance()
            assert d_dual > run


def test_product_with_repetition_generating_set():
    I = CosetSet.coset(2, 15, 1)
    h = CyclicCode(I)
    zero_set = CyclicCode(CosetSet.coset(2, 15, 0))
    assert (h * zero_set).I == I


def test_nested_cyclic_square_distance_is_exact_n15():
    # nested pair: the square's distance report is exact and matches brute force
    from schurmp import matrix_product as mp
    I1 = CosetSet.from_reps(2, 15, [0, 1])
    I2 = CosetSet.from_reps(2, 15, [0])
    assert I2 <= I1
    c1, c2 = CyclicCode(I1).code, CyclicCode(I2).code
    assert c1.contains(c2)
    spec, report = mp.square_uuv(c1, c2)
    assert report.exact
    assert mp.build(spec).min_distance() == report.bound


def test_non_nested_cyclic_square_sets_match_materialization():
    # Schur square of [C(I1), C(I2)]A has generating sets I1+I1, I2+(I1 u I2)
    from schurmp import matrix_product as mp
    I1 = CosetSet.from_reps(2, 15, [1, 5])
    I2 = CosetSet.from_reps(2, 15, [0, 7])
    assert not I2 <= I1 and not I1 <= I2
    c1, c2 = CyclicCode(I1).code, CyclicCode(I2).code
    direct = mp.build(mp.uuv_spec(c1, c2)).square()
    S11, S12 = I1.sumset(I1), I2.sumset(I1 | I2)
    expected = mp.build(mp.uuv_spec(CyclicCode(S11).code, CyclicCode(S12).code))
    assert direct == expected
    assert direct.k == len(S11) + len(S12)


def test_product_and_sum_match_linear_algebra():
    rng = random.Random(1)
    reps = CosetSet.full(2, 15).reps()
    for _ in range(25):
        I1 = CosetSet.from_reps(2, 15, [a for a in reps if rng.random() < 0.5] or [0])
        I2 = CosetSet.from_reps(2, 15, [a for a in reps if rng.random() < 0.5] or [0])
        h1, h2 = CyclicCode(I1), CyclicCode(I2)
        assert (h1 * h2).code == h1.code.schur(h2.code)
        assert (h1 + h2).code == h1.code + h2.code
        prod = h1 * h2
        assert prod.dim == len(I1.sumset(I2))
        if prod.dim:
            assert prod.code.min_distance() >= bch_bound(I1.sumset(I2))


def test_cyclic_code_over_gf4():
    # non-prime base field: GF(4) length 5 lives inside GF(16)
    f4 = make_field(2, 2)
    I = CosetSet.coset(4, 5, 1)
    assert sorted(I.elems) == [1, 4]
    h = CyclicCode(I)
    assert h.dim == 2 and h.code.k == 2
    xn1 = tuple([1] + [0] * 4 + [1])
    _, rem = poly_divmod(f4, xn1, h.generator_poly)
    assert rem == ()
    B = eval_code(4, 5, I.neg().elems)
    assert subfield_subcode(B, f4) == h.code
    h2 = CyclicCode(CosetSet.from_reps(4, 5, [1, 2]))
    assert (h * h2).code == h.code.schur(h2.code)


# ---------------------------------------------------------------------------
# restricted weights
# ---------------------------------------------------------------------------

def test_restricted_weight_examples():
    cfg = RestrictedWeightConfig(2, 5, 5, 2)
    assert restricted_weight(cfg, 0) == 0
    assert restricted_weight(cfg, 24) == 2  # 11000 in binary, s = r
    with pytest.raises(ValueError):
        restricted_weight(cfg, 31)
    with pytest.raises(ValueError):
        RestrictedWeightConfig(2, 5, 6, 1)
    with pytest.raises(ValueError):
        RestrictedWeightConfig(2, 5, 5, 6)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 7 - 2),
       st.integers(min_value=0, max_value=6))
def test_restricted_weight_coset_invariance(t, shift):
    cfg = RestrictedWeightConfig(2, 7, 3, 3)
    rotated = (t * pow(2, shift, cfg.n)) % cfg.n
    assert restricted_weight(cfg, t) == restricted_weight(cfg, rotated)


def test_restricted_weight_subadditive_under_integer_sum():
    cfg = RestrictedWeightConfig(2, 5, 5, 2)
    for t in range(cfg.n):
        for u in range(cfg.n - t):
            assert (restricted_weight(cfg, t + u)
                    <= restricted_weight(cfg, t) + restricted_weight(cfg, u))


def test_restricted_weight_sets():
    W1 = restricted_weight_set(RestrictedWeightConfig(2, 5, 5, 1))
    assert sorted(W1.elems) == [0, 1, 2, 4, 8, 16]
    W2 = restricted_weight_set(RestrictedWeightConfig(2, 5, 5, 2))
    assert len(W2) == 16
    Wall = restricted_weight_set(RestrictedWeightConfig(2, 5, 5, 5))
    assert len(Wall) == 31


def test_weight_set_union_and_sumset_inclusion():
    for r in (5, 6):
        sets = {m: restricted_weight_set(RestrictedWeightConfig(2, r, 5, m))
                for m in (1, 2, 3, 4)}
        assert sets[1] | sets[2] == sets[2]
        assert (sets[1].sumset(sets[1])).elems <= sets[2].elems
        assert (sets[1].sumset(sets[2])).elems <= sets[3].elems
        assert (sets[2].sumset(sets[2])).elems <= sets[4].elems


def test_dual_distance_bound_W():
    assert dual_distance_bound_W(RestrictedWeightConfig(2, 5, 5, 1)) == 4
    assert dual_distance_bound_W(RestrictedWeightConfig(2, 5, 5, 2)) == 8
    assert dual_distance_bound_W(RestrictedWeightConfig(2, 3, 3, 3)) == math.inf
    # non-binary fields fall back to the generic run bound
    b = dual_distance_bound_W(RestrictedWeightConfig(3, 3, 2, 1))
    W = restricted_weight_set(RestrictedWeightConfig(3, 3, 2, 1))
    assert b == W.largest_consecutive_run() + 1


def test_dual_distance_bound_W_verified_against_brute_force():
    for m in (1, 2):
        cfg = RestrictedWeightConfig(2, 5, 5, m)
        bound = dual_distance_bound_W(cfg)
        h = CyclicCode(restricted_weight_set(cfg))
        assert h.dual().code.min_distance() >= bound


# ---------------------------------------------------------------------------
# evaluation-code oracle
# ---------------------------------------------------------------------------

def test_eval_code_constants():
    B = eval_code(2, 7, [0])
    assert B.k == 1 and B.field.q == 8
    assert subfield_subcode(B, F2) == LinearCode.repetition(F2, 7)


def test_subfield_subcode_matches_cyclic_exhaustive_n7():
    for I in all_coset_closed(2, 7):
        B = eval_code(2, 7, I.neg().elems)
        assert subfield_subcode(B, F2) == CyclicCode(I).code


def test_extension_product_lemma_single_cosets_n15():
    I1, I2 = CosetSet.coset(2, 15, 1), CosetSet.coset(2, 15, 3)
    B1 = eval_code(2, 15, I1.neg().elems)
    B2 = eval_code(2, 15, I2.neg().elems)
    assert B1.schur(B2) == eval_code(2, 15, I1.sumset(I2).neg().elems)


def test_eval_code_requires_coprime():
    with pytest.raises(ValueError):
        eval_code(2, 8, [1])
