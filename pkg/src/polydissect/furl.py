"""Folding a d-fold symmetric dissection onto n/d vertices, and back.

`furl_marked` sends a dissection of the n-gon that is fixed by rotation
through n/d steps, and whose central polygon is an rd-gon (r >= 2), to a
dissection of the (n/d)-gon with one r-component marked.  `unfurl` inverts it.
"""

from dataclasses import dataclass

from .model import (
    Component,
    Dissection,
    InvalidDissection,
    MarkedDissection,
    central_polygon,
    check,
    components,
    is_fixed,
    rotation,
)


def _norm(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class FurlContext:
    n: int
    d: int
    center: tuple  # v_0 < ... < v_{r-1}, all below j

    @property
    def j(self):
        return self.n // self.d

    @property
    def r(self):
        return len(self.center)


def expand_orbit(ab, d, n):
    """The d rotated copies of edge ab under rotation by n/d steps."""
    a, b = ab
    j = n // d
    return {_norm((a + i * j) % n, (b + i * j) % n) for i in range(d)}


def edge_preimage(ab, ctx):
    """All edges of the unfolded dissection that fold onto edge ab (a < b)."""
    a, b = _norm(*ab)
    v = ctx.center
    if a > v[0] or b < v[-1]:
        return expand_orbit((a, b), ctx.d, ctx.n)
    across = expand_orbit((b, a + ctx.j), ctx.d, ctx.n)
    if (a, b) == (v[0], v[1]):
        return expand_orbit((a, b), ctx.d, ctx.n) | across
    return across


def _fold_order(n, d):
    if d < 2 or n % d or n // d < 2:
        raise ValueError(f"fold order {d} invalid for n={n}")
    return n // d


def furl(phi, d):
    return furl_marked(phi, d).base


def furl_marked(phi, d):
    n = phi.n
    j = _fold_order(n, d)
    if phi.k == 0:
        raise InvalidDissection("the empty dissection is outside the folding range (k >= 1)")
    if not is_fixed(phi, rotation(j)):
        raise InvalidDissection(f"dissection is not fixed by rotation {j}")
    center = central_polygon(phi)
    if center.arity % d or center.arity == d:
        raise InvalidDissection(
            f"central polygon has {center.arity} vertices; need a multiple rd of d={d} with r >= 2")
    edges = set()
    for x, y in phi.edges():
        if x % j == y % j:
            raise InvalidDissection(f"edge {x}-{y} folds onto a single vertex")
        edges.add(_norm(x % j, y % j))
    diagonals = [e for e in edges if (e[1] - e[0]) % j not in (1, j - 1)]
    base = check(Dissection(j, diagonals))
    mark = Component(tuple(sorted({v % j for v in center.vertices})))
    if mark.arity != center.arity // d or mark not in components(base):
        raise AssertionError(f"folded center {mark} is not a component")
    return MarkedDissection(base, mark)


def unfurl(marked, d):
    base, mark = marked.base, marked.mark
    j = base.n
    if d < 2 or j < 2:
        raise ValueError(f"unfurl needs d >= 2 and j >= 2 (d={d}, j={j})")
    if mark not in components(base):
        raise InvalidDissection(f"mark {mark.vertices} is not a component")
    if mark.arity >= 3 and base.k == 0:
        raise InvalidDissection("unfolding the bare polygon gives the empty dissection (k >= 1 required)")
    ctx = FurlContext(d * j, d, mark.vertices)
    n = ctx.n
    edges = set()
    for e in base.edges():
        edges |= edge_preimage(e, ctx)
    diagonals = [e for e in edges if (e[1] - e[0]) % n not in (1, n - 1)]
    return check(Dissection(n, diagonals))


__all__ = ["FurlContext", "expand_orbit", "edge_preimage", "furl", "furl_marked", "unfurl"]
