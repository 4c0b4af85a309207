"""Fixed-point counts |G(n, k; sigma)| for every element of the dihedral group.

Closed forms come from perpendicular counting (reflections) and from splitting
rotation-fixed dissections by their central polygon (rotations).  Each closed
form has a brute-force counterpart built on `model`.
"""

import os
from collections import Counter
from fractions import Fraction

from .exact import (
    cayley_count as A,
    composition_sum,
    kronecker,
    require_integer,
)
from .model import (
    CapacityError,
    central_polygon,
    components,
    iter_index_sets,
    polygon,
    reduce,
    reflection,
    rotation,
)

VERTEX_AXIS = "vertex_axis"
EDGE_AXIS = "edge_axis"

DEFAULT_BRUTE_MAX_N = 12
BRUTE_ENV = "POLYDISSECT_BRUTE_MAX_N"


def brute_bound():
    return int(os.environ.get(BRUTE_ENV, DEFAULT_BRUTE_MAX_N))


def check_capacity(n):
    bound = brute_bound()
    if n > bound:
        raise CapacityError(
            f"n={n} exceeds the brute-force bound {bound} (set {BRUTE_ENV} to raise it)")


# -- reflections ------------------------------------------------------------

def axial_factor(n_s, k_s, corrected=True):
    """Ways to dissect one region between consecutive perpendiculars.

    The region is an (n_s + 1)-gon carrying k_s mirrored diagonal pairs.  When
    its closing chord v_s v_{s+1} is present it uses one pair; that branch only
    exists if the chord is a real diagonal (n_s >= 2).  ``corrected=False``
    drops that guard and reproduces the unguarded form.
    """
    first = A(n_s + 1, k_s - 1)
    if corrected and n_s < 2:
        first = 0
    return first + A(n_s + 1, k_s)


def _factor_corrected(a, b):
    return axial_factor(a, b, True)


def _factor_printed(a, b):
    return axial_factor(a, b, False)


def perpendicular_terms(half, k, t_min, corrected=True):
    """Map t -> number of axis-fixed dissections with t perpendiculars.

    `half` is the number of boundary steps on one side of the axis between
    the first and last perpendicular positions.
    """
    weight = _factor_corrected if corrected else _factor_printed
    terms = {}
    for t in range(t_min, k + 1):
        if (k - t) % 2:
            continue
        terms[t] = composition_sum(weight, half, t + 1, (k - t) // 2)
    return terms


def axial_fixed(n, k, axis=VERTEX_AXIS, corrected=True):
    """Number of k-dissections of the n-gon fixed by a reflection."""
    if k < 0 or k > n - 3:
        return 0
    if n % 2 == 1:
        if axis != VERTEX_AXIS:
            raise ValueError("odd polygons only have vertex axes")
        terms = perpendicular_terms((n - 1) // 2, k, 0, corrected)
        total = sum(terms.values())
    elif axis == VERTEX_AXIS:
        terms = perpendicular_terms(n // 2, k, 1, corrected)
        total = (A(n // 2 + 1, Fraction(k - 1, 2)) + A(n // 2 + 1, Fraction(k, 2))
                 + sum(terms.values()))
    elif axis == EDGE_AXIS:
        terms = perpendicular_terms(n // 2 - 1, k, 0, corrected)
        total = sum(terms.values())
    else:
        raise ValueError(f"unknown axis {axis!r}")
    if corrected:
        for t, value in terms.items():
            # a region with k_s >= n_s contributes nothing, forcing t <= n - k - 2
            assert not value or t <= n - k - 2, (n, k, t)
    return total


# -- marked dissections -----------------------------------------------------

def _marked_weight(a, b):
    # one side of the marked r-gon cuts off an (a+1)-gon; b counts its
    # diagonals plus the cutting side itself when that side is a diagonal
    return A(a + 1, b - (1 if a >= 2 else 0))


def marked_count(j, k, r):
    """|G^r(j, k)|: k-dissections of the j-gon with one r-component marked."""
    k = require_integer(k, "diagonal count") if not isinstance(k, int) else k
    if r < 2 or k < 0:
        return 0
    if r == 2:
        return (j + k) * A(j, k)
    return require_integer(Fraction(j, r) * composition_sum(_marked_weight, j, r, k),
                           "marked count")


def marked_count_3_triangulations(j):
    """Shortcut for 3-marked triangulations: (j - 2) * A(j, j - 3)."""
    return (j - 2) * A(j, j - 3)


# -- rotations --------------------------------------------------------------

def _fold(n, d):
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    return n // d


def bordered_fixed(n, k, d):
    """rho^(n/d)-fixed k-dissections whose central polygon is a d-gon (a diameter when d = 2)."""
    j = _fold(n, d)
    if d < 2 or j < 2:
        raise ValueError(f"bordered count needs d >= 2 and n/d >= 2 (n={n}, d={d})")
    return j * A(j + 1, Fraction(k - d + kronecker(d, 2), d))


def unbordered_fixed(n, k, d):
    """rho^(n/d)-fixed k-dissections whose central polygon is an rd-gon, r >= 2.

    Counted through the bijection with r-marked dissections of the (n/d)-gon.
    """
    j = _fold(n, d)
    if d < 2:
        raise ValueError("unbordered count needs d >= 2")
    if 3 * d > n or k % d:
        return 0
    q = k // d
    total = marked_count(j, q - 1, 2)
    for r in range(3, j + 1):
        total += marked_count(j, q, r)
    return total


def rotation_fixed(n, k, d):
    """|G(n, k; rho^(n/d))| for a divisor d of n."""
    j = _fold(n, d)
    if k < 0 or k > n - 3:
        return 0
    if d == 1:
        return A(n, k)
    if k == 0:
        return 1
    if j == 1:
        return 0
    return bordered_fixed(n, k, d) + unbordered_fixed(n, k, d)


def element_fixed(n, k, sigma):
    """Closed-form fixed count for an arbitrary group element."""
    rep = reduce(sigma, n)
    if rep.kind == "rotation":
        step = rep.i or n
        return rotation_fixed(n, k, n // step)
    axis = VERTEX_AXIS if rep.i == 0 else EDGE_AXIS
    return axial_fixed(n, k, axis)


# -- brute force ------------------------------------------------------------

def brute_fixed(n, k, sigma):
    check_capacity(n)
    poly = polygon(n)
    count = 0
    for idx in iter_index_sets(n, k):
        if poly.image_mask(idx, sigma) == poly.mask(idx):
            count += 1
    return count


def brute_marked_count(j, k, r):
    check_capacity(j)
    poly = polygon(j)
    total = 0
    for idx in iter_index_sets(j, k):
        total += sum(1 for c in components(poly.to_dissection(idx)) if c.arity == r)
    return total


def brute_central_split(n, k, d):
    """Counter: central-polygon arity -> number of rho^(n/d)-fixed k-dissections."""
    check_capacity(n)
    poly = polygon(n)
    sigma = rotation(n // d)
    split = Counter()
    for idx in iter_index_sets(n, k):
        if poly.image_mask(idx, sigma) == poly.mask(idx):
            split[central_polygon(poly.to_dissection(idx)).arity] += 1
    return split


__all__ = [
    "VERTEX_AXIS", "EDGE_AXIS", "brute_bound", "check_capacity", "axial_factor",
    "perpendicular_terms", "axial_fixed", "marked_count",
    "marked_count_3_triangulations", "bordered_fixed", "unbordered_fixed",
    "rotation_fixed", "element_fixed", "brute_fixed", "brute_marked_count",
    "brute_central_split", "reflection", "rotation",
]
