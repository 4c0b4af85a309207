"""
Counting hexagon triangulations up to symmetry
==============================================

A hexagon has fourteen triangulations.  Rotations and reflections sort them
into a handful of shapes; here we count those shapes three ways.
"""

from polydissect import enumerate_dissections
from polydissect.census import element_fixed
from polydissect.model import canonical_form, group_elements
from polydissect.orbits import cyclic_burnside, dihedral_burnside

n, k = 6, 3
triangulations = list(enumerate_dissections(n, k))
print(len(triangulations), "triangulations")

# Burnside: average the number of fixed triangulations over the group
for sigma in group_elements(n, "dihedral"):
    print(f"{sigma.kind:>10} {sigma.i}: fixes {element_fixed(n, k, sigma)}")

print("rotation classes:", cyclic_burnside(n, k))
print("rotation and reflection classes:", dihedral_burnside(n, k))

# the same answer by brute force, one canonical representative per class
reps = {canonical_form(phi, "dihedral") for phi in triangulations}
for phi in sorted(reps, key=lambda d: d.diagonals):
    print(phi.diagonals)
