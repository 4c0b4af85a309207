"""Dissections of a convex n-gon as labeled graphs on vertices 0..n-1.

Sides {i, i+1 mod n} are implicit; a `Dissection` stores only its diagonals,
each as a sorted pair, the whole list sorted lexicographically.

Hot loops (enumeration, fixed-point tests, canonical forms) work on integer
indices into the lexicographically ordered diagonal list of the n-gon; index
order agrees with pair order, so sorted index tuples compare like sorted pair
lists.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple


class InvalidDissection(ValueError):
    pass


class CapacityError(RuntimeError):
    """Raised when a brute-force request exceeds the configured size bound."""


def _norm(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Dissection:
    n: int
    diagonals: tuple = ()

    def __post_init__(self):
        diags = tuple(sorted({_norm(int(a), int(b)) for a, b in self.diagonals}))
        object.__setattr__(self, "diagonals", diags)

    @property
    def k(self):
        return len(self.diagonals)

    def sides(self):
        if self.n == 2:
            return [(0, 1)]
        return sorted(_norm(v, (v + 1) % self.n) for v in range(self.n))

    def edges(self):
        return sorted(set(self.sides()) | set(self.diagonals))

    def has_edge(self, a, b):
        a, b = _norm(a, b)
        return (a, b) in self.diagonals or (b - a) % self.n in (1, self.n - 1)

    def to_record(self):
        return {"n": self.n, "diagonals": [list(e) for e in self.diagonals]}

    @classmethod
    def from_record(cls, record):
        phi = cls(int(record["n"]), [tuple(e) for e in record["diagonals"]])
        check(phi)
        return phi

    def to_json(self):
        return json.dumps(self.to_record())

    @classmethod
    def from_json(cls, text):
        return cls.from_record(json.loads(text))


class GroupElement(NamedTuple):
    """Rotation v -> v + i or reflection v -> i - v (mod n)."""

    kind: str
    i: int

    def __call__(self, v, n):
        if self.kind == "rotation":
            return (v + self.i) % n
        return (self.i - v) % n

    def compose(self, other, n):
        """Return self o other, i.e. apply `other` first."""
        if self.kind == "rotation":
            return GroupElement(other.kind, (self.i + other.i) % n)
        if other.kind == "rotation":
            return GroupElement("reflection", (self.i - other.i) % n)
        return GroupElement("rotation", (self.i - other.i) % n)


def rotation(i):
    return GroupElement("rotation", i)


def reflection(i):
    return GroupElement("reflection", i)


IDENTITY = rotation(0)


def group_elements(n, group):
    if group not in ("cyclic", "dihedral"):
        raise ValueError(f"unknown group {group!r}")
    elements = [rotation(i) for i in range(n)]
    if group == "dihedral":
        elements += [reflection(i) for i in range(n)]
    return elements


def parse_element(text):
    """Parse 'rot:I' or 'refl:I'."""
    kind, _, num = text.partition(":")
    kinds = {"rot": "rotation", "rotation": "rotation",
             "refl": "reflection", "reflection": "reflection"}
    if kind not in kinds or not num.lstrip("-").isdigit():
        raise ValueError(f"bad group element {text!r}; expected rot:I or refl:I")
    return GroupElement(kinds[kind], int(num))


class Component(NamedTuple):
    vertices: tuple

    @property
    def arity(self):
        return len(self.vertices)

    def edges(self, n):
        vs = self.vertices
        if len(vs) == 2:
            return [_norm(*vs)]
        return sorted(_norm(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class MarkedDissection:
    base: Dissection
    mark: Component

    def __post_init__(self):
        vertices = self.mark.vertices if isinstance(self.mark, Component) else self.mark
        object.__setattr__(self, "mark", Component(tuple(sorted(vertices))))

    def to_record(self):
        record = self.base.to_record()
        record["mark"] = list(self.mark.vertices)
        return record

    @classmethod
    def from_record(cls, record):
        base = Dissection.from_record(record)
        marked = cls(base, Component(tuple(record["mark"])))
        if marked.mark not in components(base):
            raise InvalidDissection(f"mark {list(marked.mark.vertices)} is not a component")
        return marked

    def to_json(self):
        return json.dumps(self.to_record())

    @classmethod
    def from_json(cls, text):
        return cls.from_record(json.loads(text))


def crosses(e1, e2, n=None):
    """True iff chords e1 and e2 cross in the interior of the polygon."""
    a, b = _norm(*e1)
    c, d = _norm(*e2)
    return a < c < b < d or c < a < d < b


def validate(phi):
    """Return None if `phi` is a valid dissection, else a description of the first violation."""
    n = phi.n
    if n == 2:
        return None if not phi.diagonals else "a digon has no diagonals"
    if n < 3:
        return f"polygon needs at least 3 vertices, got {n}"
    for a, b in phi.diagonals:
        if not (0 <= a < b < n):
            return f"out-of-range vertex in {a}-{b}"
        if (b - a) % n in (1, n - 1):
            return f"side-as-diagonal {a}-{b}"
    diags = phi.diagonals
    for x in range(len(diags)):
        for y in range(x + 1, len(diags)):
            if crosses(diags[x], diags[y]):
                return f"crossing pair {diags[x]} and {diags[y]}"
    return None


def check(phi):
    problem = validate(phi)
    if problem is not None:
        raise InvalidDissection(problem)
    return phi


# -- index layer ------------------------------------------------------------

class _Polygon:
    def __init__(self, n):
        self.n = n
        self.diagonals = [(a, b) for a in range(n) for b in range(a + 2, n)
                          if not (a == 0 and b == n - 1)]
        self.index = {e: i for i, e in enumerate(self.diagonals)}
        self.cross = [
            sum(1 << y for y, f in enumerate(self.diagonals) if crosses(e, f))
            for e in self.diagonals
        ]
        self._perms = {}

    def perm(self, sigma):
        p = self._perms.get(sigma)
        if p is None:
            n = self.n
            p = tuple(self.index[_norm(sigma(a, n), sigma(b, n))] for a, b in self.diagonals)
            self._perms[sigma] = p
        return p

    def mask(self, indices):
        m = 0
        for i in indices:
            m |= 1 << i
        return m

    def image_mask(self, indices, sigma):
        p = self.perm(sigma)
        m = 0
        for i in indices:
            m |= 1 << p[i]
        return m

    def to_dissection(self, indices):
        return Dissection(self.n, [self.diagonals[i] for i in indices])

    def to_indices(self, phi):
        return tuple(sorted(self.index[e] for e in phi.diagonals))


@lru_cache(maxsize=64)
def polygon(n):
    if n < 3:
        raise ValueError(f"polygon needs n >= 3, got {n}")
    return _Polygon(n)


def iter_index_sets(n, k=None):
    """Yield sorted index tuples of pairwise non-crossing diagonal sets.

    With `k` given only sets of exactly k diagonals are produced; otherwise
    every size.  Order is lexicographic in the diagonal list.
    """
    poly = polygon(n)
    cross = poly.cross
    full = (1 << len(poly.diagonals)) - 1
    if k is not None and k < 0:
        return
    if k is None or k == 0:
        yield ()
    if k == 0:
        return
    chosen = []
    # stack of remaining-candidate masks; candidates always have index > last chosen
    stack = [full]
    while stack:
        m = stack[-1]
        if not m:
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        low = m & -m
        i = low.bit_length() - 1
        stack[-1] = m ^ low
        chosen.append(i)
        rest = (m ^ low) & ~cross[i]
        depth = len(chosen)
        if k is None:
            yield tuple(chosen)
        elif depth == k:
            yield tuple(chosen)
            chosen.pop()
            continue
        elif rest.bit_count() < k - depth:
            chosen.pop()
            continue
        stack.append(rest)


def enumerate_dissections(n, k):
    """Yield every k-dissection of the n-gon exactly once."""
    poly = polygon(n)
    for idx in iter_index_sets(n, k):
        yield poly.to_dissection(idx)


def apply(sigma, phi):
    n = phi.n
    return Dissection(n, [(sigma(a, n), sigma(b, n)) for a, b in phi.diagonals])


def reduce(sigma, n):
    """Representative with the same number of fixed dissections as `sigma`.

    Rotations go to rotation gcd(n, i) (identity for i = 0); reflections to
    reflection 0 (axis through a vertex) or reflection 1 (axis through the
    midpoints of two sides, even n only).
    """
    if sigma.kind == "rotation":
        return rotation(gcd(n, sigma.i % n) % n)
    if n % 2 == 1 or sigma.i % 2 == 0:
        return reflection(0)
    return reflection(1)


def is_fixed(phi, sigma):
    return apply(sigma, phi).diagonals == phi.diagonals


# -- faces and components ---------------------------------------------------

def faces(phi):
    """Faces of the subdivision, each as a sorted vertex tuple."""
    n = phi.n
    if n == 2:
        return []
    diags = phi.diagonals
    out = []
    regions = [tuple(range(n))]
    while regions:
        region = regions.pop()
        pos = {v: i for i, v in enumerate(region)}
        r = len(region)
        for a, b in diags:
            if a in pos and b in pos:
                ia, ib = pos[a], pos[b]
                if (ib - ia) % r not in (1, r - 1):
                    break
        else:
            out.append(region)
            continue
        # regions are kept sorted, so ia < ib
        regions.append(region[ia:ib + 1])
        regions.append(tuple(sorted(region[ib:] + region[:ia + 1])))
    return sorted(out)


def components(phi):
    """Every edge (side or diagonal) as a 2-component plus every face."""
    digons = [Component(e) for e in phi.edges()]
    return digons + [Component(f) for f in faces(phi)]


def _gaps(vertices, n):
    r = len(vertices)
    return [(vertices[(i + 1) % r] - vertices[i]) % n or n for i in range(r)]


def central_polygon(phi):
    """The component whose closed region contains the center of the polygon."""
    n = phi.n
    if n < 3:
        raise ValueError("central polygon needs n >= 3")
    if n % 2 == 0:
        for a, b in phi.diagonals:
            if b - a == n // 2:
                return Component((a, b))
    found = [f for f in faces(phi) if all(2 * g < n for g in _gaps(f, n))]
    if len(found) != 1:
        raise AssertionError(f"expected one central face, found {found}")
    return Component(found[0])


def is_outer(v, e, n):
    """True iff v lies strictly inside the shorter boundary arc between e's endpoints."""
    a, b = e
    gap = (b - a) % n
    if 2 * gap == n:
        raise ValueError(f"{a}-{b} is a diameter; the shorter arc is ambiguous")
    if 2 * gap > n:
        a, b, gap = b, a, n - gap
    return 0 < (v - a) % n < gap


# -- orbits -----------------------------------------------------------------

def canonical_indices(indices, n, group):
    poly = polygon(n)
    best = tuple(indices)
    for sigma in group_elements(n, group):
        p = poly.perm(sigma)
        image = tuple(sorted(p[i] for i in indices))
        if image < best:
            best = image
    return best


def canonical_form(phi, group):
    """Lexicographically smallest image of `phi` under the group."""
    if phi.n < 3:
        return phi
    poly = polygon(phi.n)
    return poly.to_dissection(canonical_indices(poly.to_indices(phi), phi.n, group))
