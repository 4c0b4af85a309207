"""
Folding a symmetric dissection
==============================

A dissection fixed by a rotation of order d, whose central piece is not a
d-gon, folds onto a smaller polygon with one marked piece.  Unfolding gives
the original back.
"""

from polydissect.furl import furl_marked, unfurl
from polydissect.model import Component, Dissection, MarkedDissection, central_polygon

phi = Dissection(12, [(0, 2), (0, 4), (4, 6), (6, 8), (6, 10), (10, 0)])
print("central piece:", central_polygon(phi).vertices)

folded = furl_marked(phi, 2)
print("folded:", folded.to_json())
print("round trip ok:", unfurl(folded, 2) == phi)

# going the other way, from a marked square with one diagonal
marked = MarkedDissection(Dissection(4, [(0, 2)]), Component((0, 2)))
for d in (2, 3, 4):
    big = unfurl(marked, d)
    print(f"d={d}:", big.n, "sides,", big.k, "diagonals, central", central_polygon(big).vertices)
