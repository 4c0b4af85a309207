"""Exact counts of dissections of a regular polygon up to rotation and reflection."""

from .exact import catalan, cayley_count
from .model import Dissection, GroupElement, MarkedDissection, enumerate_dissections
from .orbits import (
    canonical_orbit_count,
    cyclic_burnside,
    cyclic_formula,
    dihedral_burnside,
    dihedral_formula,
    reconcile,
    special_case,
)

__version__ = "0.1.0"
