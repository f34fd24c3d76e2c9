import pytest

from schurmp import matrix_product as mp
from schurmp.hermitian import (build_c_rs, c_rs_params, hermitian_curve,
                               product_check, square_c_rs)

TABLE_GF16 = [
    (13, 2, 960, 17, 714, 66, 494),
    (16, 2, 960, 23, 672, 84, 416),
    (19, 2, 960, 29, 630, 102, 338),
    (22, 2, 960, 35, 588, 120, 260),
    (13, 4, 960, 38, 612, 168, 342),
    (16, 4, 960, 50, 576, 210, 288),
    (19, 4, 960, 62, 540, 252, 234),
    (13, 6, 960, 63, 510, 286, 190),
    (16, 6, 960, 81, 480, 352, 160),
    (13, 7, 960, 77, 459, 351, 114),
    (16, 7, 960, 98, 432, 429, 96),
    (13, 8, 960, 92, 408, 420, 38),
    (16, 8, 960, 116, 384, 510, 32),
]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_point_count_and_curve_equation(q):
    curve = hermitian_curve(q)
    assert len(curve.points) == q ** 3
    f = curve.field
    for x, y in curve.points:
        assert f.add(f.pow(y, q), y) == f.pow(x, q + 1)
    assert curve.genus == q * (q - 1) // 2


def test_monomial_basis_examples():
    curve = hermitian_curve(2)
    assert curve.monomial_basis(0) == ((0, 0),)
    # pole orders 0, 2, 3, 4 -> 1, x, y, x^2
    assert curve.monomial_basis(4) == ((0, 0), (1, 0), (0, 1), (2, 0))
    curve4 = hermitian_curve(4)
    assert len(curve4.monomial_basis(13)) == 13 - 6 + 1


def test_code_dimensions_q2():
    curve = hermitian_curve(2)
    c2 = curve.code(2)
    assert (c2.n, c2.k, c2.field.q) == (8, 2, 4)
    c4 = curve.code(4)
    assert c4.k == 4
    assert c4.min_distance() == 8 - 4  # designed distance is exact here


@pytest.mark.parametrize("q", [2, 3])
def test_dimension_formula_across_window(q):
    curve = hermitian_curve(q)
    for r in curve.r_window():
        assert curve.code(r).k == r - curve.genus + 1


def test_codes_are_nested():
    curve = hermitian_curve(3)
    for r in range(0, 16):
        assert curve.code(r + 1).contains(curve.code(r))


def test_product_check_equality_at_threshold():
    curve = hermitian_curve(2)
    v = product_check(curve, 5, 5)  # 5 >= 2g+1 = 3
    assert v.inclusion and v.equality_expected and v.equality

    v0 = product_check(curve, 0, 3)
    assert v0.inclusion
    assert v0.equality  # constants: C_0 * C_3 = C_3 exactly

    curve3 = hermitian_curve(3)
    v3 = product_check(curve3, 7, 6)  # thresholds 2g+1 = 7, 2g = 6
    assert v3.equality_expected and v3.equality


def test_build_c_rs_q3():
    curve = hermitian_curve(3)
    spec = build_c_rs(curve, 7, 2)
    assert spec.nested()
    built = mp.build(spec)
    assert (built.n, built.k) == (216, 11)


def test_square_c_rs_q3_collapses_and_matches():
    curve = hermitian_curve(3)
    sq = square_c_rs(curve, 7, 2, verify=True)
    built_sq = mp.build(sq)
    assert built_sq.k == (2 * 2 - 1) * (2 * 7 - 3 + 2)
    direct = mp.build(build_c_rs(curve, 7, 2)).square()
    assert built_sq == direct


def test_c_rs_window_errors():
    curve3 = hermitian_curve(3)
    with pytest.raises(ValueError):
        build_c_rs(curve3, 7, 1)  # s < 2
    with pytest.raises(ValueError):
        build_c_rs(curve3, 6, 2)  # r < 2g+1
    with pytest.raises(ValueError):
        build_c_rs(curve3, 8, 2)  # r+s too large
    with pytest.raises(ValueError):
        c_rs_params(4, 13, 9)  # s > q^2/2
    with pytest.raises(ValueError):
        c_rs_params(4, 12, 2)  # r < 2g+1


@pytest.mark.parametrize("r,s,n,k,d,k_star,d_star", TABLE_GF16)
def test_c_rs_params_match_reference_rows(r, s, n, k, d, k_star, d_star):
    assert c_rs_params(4, r, s) == (n, k, d, k_star, d_star)


def test_c_rs_params_q3():
    assert c_rs_params(3, 7, 2) == (216, 11, 140, 39, 78)


def test_c_rs_distance_bound_via_vandermonde_formula():
    curve = hermitian_curve(3)
    spec = build_c_rs(curve, 7, 2)
    dists = [mp.DistanceInfo(27 - (7 + 2 - 1 - i), False) for i in range(2)]
    report = mp.vandermonde_square_distance_bound(spec, dists)
    assert report.bound == c_rs_params(3, 7, 2)[2]

    sq = square_c_rs(curve, 7, 2, verify=False)
    sq_dists = [mp.DistanceInfo(27 - (14 + 2 - i), False) for i in range(3)]
    report_sq = mp.vandermonde_square_distance_bound(sq, sq_dists)
    assert report_sq.bound == c_rs_params(3, 7, 2)[4]


@pytest.mark.slow
def test_q4_rank_verification_rows():
    curve = hermitian_curve(4)
    for r, s in [(13, 2), (16, 4)]:
        n, k, _, k_star, _ = c_rs_params(4, r, s)
        built = mp.build(build_c_rs(curve, r, s))
        assert (built.n, built.k) == (n, k)
        built_sq = mp.build(square_c_rs(curve, r, s, verify=False))
        assert built_sq.k == k_star
        assert built.square() == built_sq
