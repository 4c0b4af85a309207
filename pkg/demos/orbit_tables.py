"""
Tables of orbit counts
======================

Exact counts of k-dissections up to rotation, and up to rotation and
reflection, for small polygons.  The formulas scale well past the reach of
enumeration.
"""

from polydissect.orbits import cyclic_burnside, dihedral_burnside, formula

print("up to rotation")
for n in range(3, 13):
    print(f"{n:>3}", [cyclic_burnside(n, k) for k in range(n - 2)])

print("up to rotation and reflection")
for n in range(3, 13):
    print(f"{n:>3}", [dihedral_burnside(n, k) for k in range(n - 2)])

# a polygon far beyond brute force
print("60-gon, 20 diagonals:", formula(60, 20, "dihedral"))
