"""Integer and rational building blocks: binomials, Bernoulli numbers,
compositions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trigsum.exact_core import (
    BernoulliCache,
    Composition,
    bernoulli,
    binom,
    composition_count,
    composition_tuples,
    compositions,
)


def test_binom_frozen_values():
    assert binom(0, 0) == 1
    assert binom(23, 11) == 1352078
    assert binom(50, 25) == 126410606437752
    assert binom(6, 3) == 20


def test_binom_out_of_range_is_zero():
    assert binom(5, 7) == 0
    assert binom(5, -1) == 0
    assert binom(0, 1) == 0


def test_binom_negative_n_rejected():
    with pytest.raises(ValueError):
        binom(-1, 0)


@given(st.integers(min_value=2, max_value=60), st.data())
@settings(max_examples=150)
def test_binom_pascal_identity(n, data):
    """Property: binom(n,k) = binom(n-1,k-1) + binom(n-1,k) for 0 < k < n."""
    k = data.draw(st.integers(min_value=1, max_value=n - 1))
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@given(st.integers(min_value=0, max_value=60), st.data())
@settings(max_examples=150)
def test_binom_symmetry(n, data):
    """Property: binom(n,k) = binom(n,n-k)."""
    k = data.draw(st.integers(min_value=0, max_value=n))
    assert binom(n, k) == binom(n, n - k)


BERNOULLI_KNOWN = {
    0: Fraction(1),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
}


def test_bernoulli_frozen_values():
    for index, value in BERNOULLI_KNOWN.items():
        assert bernoulli(index) == value


def test_bernoulli_odd_or_negative_rejected():
    for index in (1, 3, 7, -2):
        with pytest.raises(ValueError):
            bernoulli(index)


def _akiyama_tanigawa(n_max):
    """Independent Bernoulli generator (Akiyama-Tanigawa algorithm),
    yielding B_0..B_n_max with the B_1 = +1/2 convention; even indices are
    convention-independent."""
    out = []
    row = []
    for n in range(n_max + 1):
        row.append(Fraction(1, n + 1))
        for j in range(n, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out

def test_bernoulli_matches_akiyama_tanigawa():
    table = _akiyama_tanigawa(40)
    for index in range(0, 42, 2):
        assert bernoulli(index) == table[index]


def _bernoulli_or_zero(k):
    if k == 1:
        return Fraction(-1, 2)
    if k % 2:
        return Fraction(0)
    return bernoulli(k)


@given(st.integers(min_value=2, max_value=40).filter(lambda n: n % 2 == 0))
@settings(max_examples=40)
def test_bernoulli_defining_recurrence(n):
    """Property: sum_{k=0}^{n} binom(n+1,k) B_k = 0 for even n >= 2."""
    total = sum(binom(n + 1, k) * _bernoulli_or_zero(k) for k in range(n + 1))
    assert total == 0


def test_bernoulli_cache_grows_and_is_stable():
    cache = BernoulliCache()
    assert len(cache) == 1
    first = cache.get(20)
    assert len(cache) == 11
    assert cache.get(20) == first
    assert cache.table[10] == first
    assert cache.table[0] == 1


def test_composition_frozen_order():
    """Colexicographic order is a fixture other modules' sums rely on."""
    assert list(composition_tuples(2, 3)) == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]
    assert list(composition_tuples(3, 1)) == [(3,)]


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition(parts=(1, -1), total=0)
    with pytest.raises(ValueError):
        Composition(parts=(1, 2), total=4)
    with pytest.raises(ValueError):
        list(composition_tuples(-1, 2))
    with pytest.raises(ValueError):
        list(composition_tuples(2, 0))


@given(
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=1, max_value=10),
)
@settings(max_examples=80)
def test_composition_enumeration_count(total, parts):
    """Property: enumerated count equals the stars-and-bars binomial."""
    seen = list(compositions(total, parts))
    assert len(seen) == composition_count(total, parts)
    assert len(set(c.parts for c in seen)) == len(seen)
    for c in seen:
        assert len(c.parts) == parts
        assert sum(c.parts) == total


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=1_000
)


@given(rationals, rationals)
@settings(max_examples=100)
def test_rational_arithmetic_is_exact(a, b):
    """Property: sum and product agree with cross-multiplied integer forms."""
    s = a + b
    assert s.numerator * a.denominator * b.denominator == (
        a.numerator * b.denominator + b.numerator * a.denominator
    ) * s.denominator
    p = a * b
    assert p.numerator * a.denominator * b.denominator == (
        a.numerator * b.numerator
    ) * p.denominator


@given(rationals)
@settings(max_examples=50)
def test_rational_normalization_idempotent(a):
    from math import gcd

    assert gcd(a.numerator, a.denominator) == 1
    assert Fraction(a.numerator, a.denominator) == a
