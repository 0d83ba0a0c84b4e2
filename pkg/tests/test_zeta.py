import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fmzv.words import WordPolynomial, composition_to_word
from fmzv.zeta import (
    WeightedComposition,
    clear_caches,
    weighted_table,
    z_eval,
    zeta_finite,
    zeta_table,
    zeta_weighted,
)
from oracles import brute_zeta

compositions = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple)
pool = st.sampled_from([Fraction(-1), Fraction(1), Fraction(2), Fraction(1, 2)])


@pytest.mark.parametrize(
    "N, a, expected",
    [
        (0, (3, 1), Fraction(0)),
        (5, (), Fraction(1)),
        (3, (1,), Fraction(11, 6)),
        (4, (2, 1), Fraction(17, 32)),
    ],
)
def test_zeta_finite_examples(N, a, expected):
    assert zeta_finite(N, a) == expected


def test_zeta_table_examples():
    assert zeta_table(2, (1,)).values == (0, 1, Fraction(3, 2))
    assert zeta_table(2, ()).values == (1, 1, 1)
    assert zeta_table(3, (1, 1)).values == (0, 0, Fraction(1, 2), 1)
    t = zeta_table(6, (2, 1))
    assert t.N == 6 and len(t) == 7 and t[4] == zeta_finite(4, (2, 1))


def test_zeta_weighted_examples():
    assert zeta_weighted(4, ((2, 1), (1, 1))) == Fraction(17, 32)
    assert zeta_weighted(2, ((1,), (-1,))) == Fraction(-1, 2)
    assert zeta_weighted(3, WeightedComposition((1, 1), (-1, 2))) == Fraction(1, 24)
    with pytest.raises(ValueError):
        WeightedComposition((1,), (0,))
    with pytest.raises(ValueError):
        WeightedComposition((1, 2), (1,))


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        zeta_finite(-1, (1,))


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_harmonic_numbers(s):
    h = Fraction(0)
    for n in range(1, 51):
        h += Fraction(1, n**s)
        assert zeta_finite(n, (s,)) == h


@settings(max_examples=60)
@given(compositions, st.integers(0, 9))
def test_matches_brute_force(a, N):
    assert zeta_finite(N, a) == brute_zeta(N, a)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(1, 3), pool), min_size=1, max_size=3), st.integers(0, 8))
def test_weighted_matches_brute_force(pairs, N):
    parts, weights = zip(*pairs)
    assert zeta_weighted(N, (parts, weights)) == brute_zeta(N, parts, weights)


@given(compositions)
def test_nondecreasing_and_recursive(a):
    t = zeta_table(20, a)
    inner = zeta_table(20, a[1:])
    assert all(x <= y for x, y in zip(t.values, t.values[1:]))
    for N in range(21):
        assert t[N] == sum((inner[m - 1] / Fraction(m) ** a[0] for m in range(1, N + 1)), Fraction(0))


@given(compositions, st.integers(0, 15))
def test_all_ones_weights_reduce(a, N):
    assert zeta_weighted(N, WeightedComposition.unweighted(a)) == zeta_finite(N, a)
    assert weighted_table(N, WeightedComposition.unweighted(a)).values == zeta_table(N, a).values


def test_cache_returns_consistent_prefixes():
    long = zeta_table(30, (2, 1)).values
    clear_caches()
    short = zeta_table(5, (2, 1)).values
    assert long[:6] == short
    assert zeta_table(30, (2, 1)).values == long


def test_concurrent_lookups_agree():
    clear_caches()
    results = []

    def work():
        results.append(tuple(zeta_finite(N, (2, 1, 1)) for N in range(40)))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_z_eval_examples():
    assert z_eval(3, WordPolynomial({"1": 1})) == Fraction(11, 6)
    assert z_eval(2, WordPolynomial({"11": 2})) == 1
    assert z_eval(7, WordPolynomial({"": 1})) == 1
    with pytest.raises(ValueError):
        z_eval(3, WordPolynomial({"10": 1}))


word_polys = st.dictionaries(
    compositions.map(composition_to_word),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
    max_size=4,
).map(WordPolynomial)


@given(word_polys, word_polys, st.integers(0, 12))
def test_z_eval_linear(p, q, N):
    assert z_eval(N, p + q) == z_eval(N, p) + z_eval(N, q)
    assert z_eval(N, p.scale(3)) == 3 * z_eval(N, p)
