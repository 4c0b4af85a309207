"""Exact integer and rational primitives.

Indices of `catalan` and `cayley_count` may be any rational number (or int);
values at non-integral or out-of-range indices are 0.  This lets formula code
write ``cayley_count(n // 2 + 1, Fraction(k - 1, 2))`` without parity checks.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, prod


def as_integer(q):
    """Return `q` as an int if it is integral, else None."""
    if isinstance(q, int):
        return q
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return None


def require_integer(value, what="value"):
    """Return a Fraction-valued cardinality as an int, or raise ArithmeticError."""
    q = as_integer(value)
    if q is None:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return q


def binomial(n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _catalan(m):
    return comb(2 * m, m) // (m + 1)


def catalan(q):
    """Catalan number C_q; 0 unless q is a nonnegative integer."""
    m = as_integer(q)
    if m is None or m < 0:
        return 0
    return _catalan(m)


def euler_totient(n):
    if n <= 0:
        raise ValueError(f"totient needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors_of(n):
    if n <= 0:
        raise ValueError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _cayley(n, k):
    return comb(n + k - 1, k) * comb(n - 3, k) // (k + 1)


def cayley_count(n, k):
    """Number A(n, k) of k-dissections of a convex n-gon.

    A(2, 0) = 1 (the trivial digon); 0 unless n, k are integers with
    0 <= k <= n - 3.
    """
    n, k = as_integer(n), as_integer(k)
    if n is None or k is None:
        return 0
    if n == 2 and k == 0:
        return 1
    if n < 3 or k < 0 or k > n - 3:
        return 0
    return _cayley(n, k)


def compositions(total, parts, min_part=1):
    """Yield ordered tuples of `parts` integers >= `min_part` summing to `total`.

    Tuples come out in lexicographic order.
    """
    if parts < 1:
        return
    slack = total - parts * min_part
    if slack < 0:
        return
    yield from _compositions(slack, parts, min_part)


def _compositions(slack, parts, min_part):
    if parts == 1:
        yield (slack + min_part,)
        return
    for first in range(slack + 1):
        for rest in _compositions(slack - first, parts - 1, min_part):
            yield (first + min_part,) + rest


def _rising(lo, hi):
    # product lo * (lo+1) * ... * hi, empty product when hi < lo
    return prod(range(lo, hi + 1)) if hi >= lo else 1


def catalan_convolution(n, m, method="sum"):
    """Sum of C_{i_1} ... C_{i_m} over i_1 + ... + i_m = n with i_j >= 0."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if method == "sum":
        # m-fold convolution of C_0..C_n, truncated at degree n
        cats = [catalan(i) for i in range(n + 1)]
        power = cats
        for _ in range(m - 1):
            power = [sum(power[a] * cats[t - a] for a in range(t + 1)) for t in range(n + 1)]
        return power[n]
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    if m % 2 == 0:
        h = m // 2
        value = Fraction(m * _rising(n + 1, n + h - 1),
                         2 * _rising(n + h + 2, n + m)) * catalan(n + h)
    else:
        h = (m - 1) // 2
        value = Fraction(m * _rising(n + 1, n + h),
                         _rising(n + h + 2, n + m)) * catalan(n + h)
    return require_integer(value, "catalan convolution")


def composition_sum(weight, total, parts, budget, method="dp"):
    """Sum of prod(weight(n_i, b_i)) over n_1+...+n_p = total (n_i >= 1)
    and b_1+...+b_p = budget (b_i >= 0).

    `weight(a, b)` must vanish for b > a.  The "dp" method memoizes over
    (remaining size, parts, remaining budget); "enumerate" walks every pair of
    compositions literally and serves as its cross-check.
    """
    if method == "enumerate":
        total_sum = 0
        for ns in compositions(total, parts, 1):
            for bs in compositions(budget, parts, 0):
                total_sum += prod(weight(a, b) for a, b in zip(ns, bs))
        return total_sum
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    return _composition_dp(weight, total, parts, budget)


@lru_cache(maxsize=None)
def _composition_dp(weight, total, parts, budget):
    if parts == 0:
        return 1 if total == 0 and budget == 0 else 0
    if total < parts or budget < 0 or budget > total:
        return 0
    acc = 0
    for a in range(1, total - parts + 2):
        for b in range(min(a, budget) + 1):
            w = weight(a, b)
            if w:
                acc += w * _composition_dp(weight, total - a, parts - 1, budget - b)
    return acc


def kronecker(a, b):
    return 1 if a == b else 0


__all__ = [
    "Fraction", "gcd", "as_integer", "require_integer", "binomial", "catalan",
    "euler_totient", "divisors_of", "cayley_count", "compositions",
    "catalan_convolution", "composition_sum", "kronecker",
]
