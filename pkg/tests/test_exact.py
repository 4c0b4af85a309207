from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polydissect.exact import (
    as_integer,
    binomial,
    catalan,
    catalan_convolution,
    cayley_count as A,
    composition_sum,
    compositions,
    divisors_of,
    euler_totient,
    require_integer,
)

from oracles import (
    catalan_recurrence,
    naive_dissections,
    pascal_binomial,
    totient_count,
    trial_divisors,
)


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (3, 5, 0), (-1, 0, 0), (4, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(-3, 40), st.integers(-3, 45))
def test_binomial_matches_pascal(n, k):
    assert binomial(n, k) == pascal_binomial(n, k)


@pytest.mark.parametrize("q,expected", [(0, 1), (4, 14), (Fraction(3, 2), 0), (-1, 0), (Fraction(10, 2), 42)])
def test_catalan_examples(q, expected):
    assert catalan(q) == expected


def test_catalan_matches_recurrence():
    for m in range(30):
        assert catalan(m) == catalan_recurrence(m)


@pytest.mark.parametrize("n,expected", [(1, 1), (12, 4), (7, 6)])
def test_totient_examples(n, expected):
    assert euler_totient(n) == expected


def test_totient_and_divisors_match_direct_counts():
    for n in range(1, 200):
        assert euler_totient(n) == totient_count(n)
        assert divisors_of(n) == trial_divisors(n)


@pytest.mark.parametrize("bad", [0, -4])
def test_totient_and_divisors_reject_nonpositive(bad):
    with pytest.raises(ValueError):
        euler_totient(bad)
    with pytest.raises(ValueError):
        divisors_of(bad)


def test_divisors_examples():
    assert divisors_of(6) == [1, 2, 3, 6]
    assert divisors_of(1) == [1]
    assert divisors_of(12) == [1, 2, 3, 4, 6, 12]


def test_cayley_examples():
    assert A(6, 2) == 21
    assert A(2, 0) == 1
    assert A(5, 3) == 0
    assert A(7, 4) == 42
    assert A(Fraction(7, 2), 1) == 0
    assert A(6, Fraction(1, 2)) == 0


def test_cayley_matches_naive_enumeration():
    for n in range(3, 10):
        for k in range(n - 2):
            assert A(n, k) == len(naive_dissections(n, k)), (n, k)


def test_cayley_catalan_relation():
    for n in range(3, 40):
        assert A(n, n - 3) == catalan(n - 2)
    assert [A(2, k) for k in range(-1, 3)] == [0, 1, 0, 0]


def test_compositions_examples():
    assert list(compositions(3, 2, 1)) == [(1, 2), (2, 1)]
    assert list(compositions(2, 3, 1)) == []
    assert list(compositions(4, 3, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(compositions(2, 2, 0)) == [(0, 2), (1, 1), (2, 0)]


@given(st.integers(0, 9), st.integers(1, 4), st.integers(0, 2))
def test_compositions_exhaustive_and_sorted(total, parts, min_part):
    got = list(compositions(total, parts, min_part))
    brute = [t for t in _product(range(min_part, total + 1), parts) if sum(t) == total]
    assert got == sorted(brute)


def _product(values, parts):
    if parts == 0:
        yield ()
        return
    for v in values:
        for rest in _product(values, parts - 1):
            yield (v,) + rest


def test_catalan_convolution_examples():
    assert catalan_convolution(2, 1, "sum") == 2
    assert catalan_convolution(2, 2, "sum") == 5
    assert catalan_convolution(2, 2, "closed") == 5


def test_catalan_convolution_small_m_edges():
    # empty products on both sides of the closed form
    for n in range(6):
        assert catalan_convolution(n, 1, "closed") == catalan(n)
        assert catalan_convolution(n, 2, "closed") == catalan(n + 1)
    assert catalan_convolution(0, 8, "closed") == 1


def _w(a, b):
    return A(a + 1, b - (1 if a >= 2 else 0))


@given(st.integers(1, 9), st.integers(1, 5), st.integers(0, 6))
def test_composition_sum_dp_matches_enumeration(total, parts, budget):
    assert composition_sum(_w, total, parts, budget, "dp") == \
        composition_sum(_w, total, parts, budget, "enumerate")


def test_integrality_helpers():
    assert as_integer(Fraction(4, 2)) == 2
    assert as_integer(Fraction(1, 2)) is None
    assert require_integer(Fraction(6, 3)) == 2
    with pytest.raises(ArithmeticError):
        require_integer(Fraction(7, 2))


def test_catalan_convolution_matches_literal_expansion():
    for n in range(9):
        for m in range(1, 6):
            literal = 0
            for c in _product(range(n + 1), m):
                if sum(c) == n:
                    term = 1
                    for i in c:
                        term *= catalan_recurrence(i)
                    literal += term
            assert catalan_convolution(n, m, "sum") == literal
            assert catalan_convolution(n, m, "closed") == literal
