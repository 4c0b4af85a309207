"""Independent brute-force oracles.

Nothing here imports the package; each function recomputes its quantity from
first principles so the tests compare two unrelated code paths.
"""

from itertools import combinations
from math import gcd


def pascal_binomial(n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def catalan_recurrence(m):
    c = [1]
    for i in range(m):
        c.append(sum(c[a] * c[i - a] for a in range(i + 1)))
    return c[m]


def totient_count(n):
    return sum(1 for m in range(1, n + 1) if gcd(m, n) == 1)


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def all_diagonals(n):
    return [(a, b) for a, b in combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]


def chords_cross(e, f):
    a, b = e
    c, d = f
    return len({a, b, c, d}) == 4 and ((a < c < b) != (a < d < b))


def naive_dissections(n, k):
    """Every k-subset of diagonals, filtered for pairwise non-crossing."""
    out = []
    for subset in combinations(all_diagonals(n), k):
        if all(not chords_cross(e, f) for e, f in combinations(subset, 2)):
            out.append(frozenset(subset))
    return out


def act(diags, n, kind, i):
    if kind == "rot":
        f = lambda v: (v + i) % n
    else:
        f = lambda v: (i - v) % n
    return frozenset(tuple(sorted((f(a), f(b)))) for a, b in diags)


def group(n, dihedral):
    els = [("rot", i) for i in range(n)]
    if dihedral:
        els += [("refl", i) for i in range(n)]
    return els


def naive_orbit_count(n, k, dihedral):
    """Count orbits by expanding each unseen dissection's full orbit."""
    seen = set()
    orbits = 0
    for phi in naive_dissections(n, k):
        if phi in seen:
            continue
        orbits += 1
        for kind, i in group(n, dihedral):
            seen.add(act(phi, n, kind, i))
    return orbits


def naive_fixed(n, k, kind, i):
    return sum(1 for phi in naive_dissections(n, k) if act(phi, n, kind, i) == phi)


def naive_faces(n, diags):
    """Faces by walking the planar embedding.

    Interior faces are traced with labels increasing cyclically.  Arriving at
    y from x, the next vertex is the neighbour w of y that comes last, going
    around from y, before reaching x again.
    """
    nbrs = {v: {(v + 1) % n, (v - 1) % n} for v in range(n)}
    for a, b in diags:
        nbrs[a].add(b)
        nbrs[b].add(a)
    darts = [(v, (v + 1) % n) for v in range(n)]
    darts += [(a, b) for a, b in diags] + [(b, a) for a, b in diags]
    seen = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        face = []
        x, y = start
        while (x, y) not in seen:
            seen.add((x, y))
            face.append(x)
            limit = (x - y) % n
            w = max((w for w in nbrs[y] if 0 < (w - y) % n < limit),
                    key=lambda w: (w - y) % n)
            x, y = y, w
        faces.append(tuple(sorted(face)))
    return sorted(faces)

