from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fmzv.identities import (
    asymptotic_gap,
    check_complementary,
    check_reciprocity,
    check_weighted_reciprocity,
    euler_depth2,
    partial_fraction_terms,
    r_direct,
    r_recurrence,
    r_shuffle,
    r_weighted_direct,
    r_weighted_recurrence,
)
from fmzv.words import shuffle_compositions
from fmzv.zeta import WeightedComposition as WC, zeta_finite
from oracles import brute_corollary1, brute_r, brute_theorem1

compositions = st.lists(st.integers(1, 3), min_size=1, max_size=2).map(tuple)
pool = st.sampled_from([Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2)])


weighted_compositions = st.lists(st.tuples(st.integers(1, 2), pool), min_size=1, max_size=2).map(
    lambda pairs: WC(*zip(*pairs))
)


# -- partial fractions --


def test_partial_fraction_examples():
    t = partial_fraction_terms(1, 1)
    assert t.k_side == ((1, 1, 1),) and t.nk_side == ((1, 1, 1),)
    t = partial_fraction_terms(2, 1)
    assert t.k_side == ((1, 1, 2), (1, 2, 1)) and t.nk_side == ((1, 2, 1),)
    assert t.evaluate(5, 2) == t.kernel(5, 2) == Fraction(1, 12)
    mirror = partial_fraction_terms(1, 2)
    assert mirror.k_side == t.nk_side and mirror.nk_side == t.k_side
    with pytest.raises(ValueError):
        partial_fraction_terms(0, 2)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(2, 25), st.data())
def test_partial_fraction_substitution(a, b, N, data):
    k = data.draw(st.integers(1, N - 1))
    t = partial_fraction_terms(a, b)
    assert t.evaluate(N, k) == Fraction(1, k**a * (N - k) ** b)


# -- R_N --


def test_r_examples():
    assert r_direct(0, (2, 1), (1,)) == 0
    assert r_direct(2, (1,), (1,)) == 1
    assert r_direct(5, (2,), ()) == zeta_finite(5, (2,))
    assert r_recurrence(2, (1,), (1,)) == 1
    assert r_recurrence(0, (3,), (1, 2)) == 0
    assert r_recurrence(10, (2,), (2,)) == 2 * zeta_finite(10, (2, 2)) + 4 * zeta_finite(10, (3, 1))
    assert r_recurrence(10, (2,), (2,)) == Fraction(30333611, 12960000)
    assert r_shuffle(2, (1,), (1,)) == 1
    assert r_shuffle(4, (2, 1), (1,)) == r_direct(4, (2, 1), (1,)) == Fraction(13, 24)
    assert r_shuffle(3, (1,), ()) == Fraction(11, 6)
    with pytest.raises(ValueError):
        r_direct(3, (), (1,))


def test_recurrence_base_cases():
    assert r_recurrence(4, (), ()) == 1
    assert r_recurrence(4, (), (2, 1)) == zeta_finite(4, (2, 1))
    assert r_recurrence(4, (2, 1), ()) == zeta_finite(4, (2, 1))


@settings(max_examples=40)
@given(compositions, compositions, st.integers(0, 8))
def test_r_routes_match_brute_force(a, b, N):
    expected = brute_r(N, a, b)
    assert r_direct(N, a, b) == expected
    assert r_recurrence(N, a, b) == expected
    assert r_shuffle(N, a, b) == expected
    assert r_direct(N, b, a) == expected


def test_euler_depth2_examples():
    assert euler_depth2(2, 2) == [(2, (2, 2)), (4, (3, 1))]
    assert euler_depth2(1, 1) == [(2, (1, 1))]
    assert euler_depth2(3, 2) == shuffle_compositions((3,), (2,))


# -- reciprocity --


def test_reciprocity_examples():
    r = check_reciprocity(1, 1, (1,), (1,))
    assert (r.lhs, r.rhs, r.residual) == (0, 0, 0) and r.ok
    r = check_reciprocity(2, 1, (1,), (1,))
    assert (r.lhs, r.rhs) == (2, 2) and r.ok
    r = check_reciprocity(6, 3, (2, 1), (1, 1))
    assert r.lhs == Fraction(17, 16) and r.ok
    with pytest.raises(ValueError):
        check_reciprocity(3, 4, (1,), (1,))
    with pytest.raises(ValueError):
        check_reciprocity(3, 0, (1,), (1,))
    with pytest.raises(ValueError):
        check_reciprocity(3, 1, (), (1,))


def test_harmonic_reciprocity():
    # first-order harmonic case: sums of H_{N-k}/k on both sides
    for N in range(1, 12):
        for j in range(1, N + 1):
            H = [sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0)) for n in range(N + 2)]
            lhs = sum(H[N - k] / k for k in range(1, j + 1)) + sum(H[N - k] / k for k in range(1, N + 2 - j))
            rhs = -Fraction(1, j * (N + 1 - j)) + H[j] * H[N + 1 - j] + sum(H[N - k] / k for k in range(1, N + 1))
            assert lhs == rhs
            r = check_reciprocity(N, j, (1,), (1,))
            assert r.lhs == lhs and r.rhs == rhs


@settings(max_examples=30)
@given(compositions, compositions, st.integers(1, 7), st.data())
def test_reciprocity_matches_brute_force(a, b, N, data):
    j = data.draw(st.integers(1, N))
    lhs, rhs = brute_theorem1(N, j, a, b)
    r = check_reciprocity(N, j, a, b)
    assert (r.lhs, r.rhs) == (lhs, rhs) and r.residual == 0


def test_complementary_examples():
    for args in [(2, 1, (1,), (1,)), (5, 2, (2,), (1,)), (1, 1, (1,), (1,))]:
        r = check_complementary(*args)
        assert r.ok and r.residual == 0 and r.route_residual == 0
    assert check_complementary(5, 2, (2,), (1,)).lhs == Fraction(203, 144)


@settings(max_examples=30)
@given(compositions, compositions, st.integers(1, 7), st.data())
def test_complementary_matches_brute_force(a, b, N, data):
    j = data.draw(st.integers(1, N))
    lhs, rhs = brute_corollary1(N, j, a, b)
    r = check_complementary(N, j, a, b)
    assert (r.lhs, r.rhs) == (lhs, rhs) and r.ok


def test_asymptotic_gap():
    for a, b in [((2,), (2,)), ((2,), (3,))]:
        gaps = [asymptotic_gap(n, a, b, 500) for n in (10, 20, 40)]
        assert gaps[0] > gaps[1] > gaps[2] > 0
    assert asymptotic_gap(0, (2,), (2,), 10) >= 0
    with pytest.raises(ValueError):
        asymptotic_gap(3, (1,), (2,), 100)
    with pytest.raises(ValueError):
        asymptotic_gap(10, (2,), (2,), 20)


# -- weighted --


def test_weighted_r_examples():
    ones = WC.unweighted
    assert r_weighted_direct(2, ones((1,)), ones((1,))) == 1
    assert r_weighted_direct(3, WC((1,), (-1,)), WC((1,), (1,))) == -1
    assert r_weighted_direct(0, WC((2,), (2,)), WC((1,), (-1,))) == 0
    with pytest.raises(ValueError):
        r_weighted_direct(2, WC((), ()), ones((1,)))


@settings(max_examples=40)
@given(weighted_compositions, weighted_compositions, st.integers(0, 7))
def test_weighted_r_matches_brute_force(aw, bw, N):
    expected = brute_r(N, aw.parts, bw.parts, aw.weights, bw.weights)
    assert r_weighted_direct(N, aw, bw) == expected
    assert r_weighted_recurrence(N, aw, bw) == expected
    assert r_weighted_direct(N, bw, aw) == expected


def test_weighted_recurrence_examples():
    aw, bw = WC((1,), (-1,)), WC((1,), (2,))
    for N in range(11):
        assert r_weighted_recurrence(N, aw, bw) == r_weighted_direct(N, aw, bw)
    aw, bw = WC((2, 1), (-1, 1)), WC((1,), (-1,))
    for N in range(9):
        assert r_weighted_recurrence(N, aw, bw) == r_weighted_direct(N, aw, bw)
    for N in range(9):
        assert r_weighted_recurrence(N, WC.unweighted((2, 1)), WC.unweighted((1, 2))) == r_recurrence(N, (2, 1), (1, 2))


def test_printed_orientation_disagrees():
    aw, bw = WC((1,), (-1,)), WC((1,), (2,))
    assert r_weighted_recurrence(3, aw, bw, "printed") != r_weighted_direct(3, aw, bw)
    # symmetric heads make both orientations coincide
    aw, bw = WC((1,), (-1,)), WC((2,), (-1,))
    assert r_weighted_recurrence(6, aw, bw, "printed") == r_weighted_direct(6, aw, bw)
    with pytest.raises(ValueError):
        r_weighted_recurrence(3, aw, bw, "sideways")


def test_weighted_reciprocity_examples():
    r = check_weighted_reciprocity(4, 2, WC((1,), (-1,)), WC((1,), (-1,)))
    assert r.ok and r.lhs == Fraction(3, 2)
    r = check_weighted_reciprocity(5, 3, WC((2,), (2,)), WC((1, 1), (-1, 1)))
    assert r.ok and r.lhs == Fraction(35, 144)
    plain = check_reciprocity(6, 2, (2, 1), (1,))
    ones = check_weighted_reciprocity(6, 2, WC.unweighted((2, 1)), WC.unweighted((1,)))
    assert (ones.lhs, ones.rhs, ones.residual) == (plain.lhs, plain.rhs, plain.residual)


@settings(max_examples=30)
@given(weighted_compositions, weighted_compositions, st.integers(1, 6), st.data())
def test_weighted_reciprocity_matches_brute_force(aw, bw, N, data):
    j = data.draw(st.integers(1, N))
    lhs, rhs = brute_theorem1(N, j, aw.parts, bw.parts, aw.weights, bw.weights)
    r = check_weighted_reciprocity(N, j, aw, bw)
    assert (r.lhs, r.rhs) == (lhs, rhs) and r.ok


def test_report_json_schema():
    doc = check_reciprocity(2, 1, (1,), (1,)).to_json()
    assert {"N": 2, "j": 1, "lhs": "2/1", "rhs": "2/1", "residual": "0/1", "ok": True}.items() <= doc.items()
    doc = check_weighted_reciprocity(2, 1, WC((1,), ("1/2",)), WC((1,), (-1,))).to_json()
    assert doc["sigma"] == ["1/2"] and doc["tau"] == ["-1/1"]
