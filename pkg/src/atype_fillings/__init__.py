"""Combinatorics and exact algebra of the Catalan family of A-type Lagrangian fillings."""

from atype_fillings.combinatorics import (
    Diagonal, Permutation312, Triangulation, catalan, clip_sequence, enumerate_312, triangulation_of,
)
from atype_fillings.flips import flip, rotation_geodesic
from atype_fillings.orbits import orbit_census, orbit_count, orbit_size

__all__ = [
    "Diagonal", "Permutation312", "Triangulation", "catalan", "clip_sequence",
    "enumerate_312", "flip", "orbit_census", "orbit_count", "orbit_size", "rotation_geodesic",
    "triangulation_of",
]
__version__ = "0.1.0"
