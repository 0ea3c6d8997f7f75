"""BGG-complex combinatorics for the isotropic 2-Grassmannian iGr(2,2n).

Weyl-group and root machinery for type C_n, parabolic Hasse diagrams,
regular and singular orbit diagrams, Penrose-transform spectral pages,
assembly of the singular BGG complexes, exact verification of the
corresponding maximal vectors in generalized Verma modules, and the
big-cell geometry of the twistor double fibration.
"""

from bgg import geometry, orbits, parabolic, penrose, render, verma, weyl

__all__ = ["weyl", "parabolic", "orbits", "penrose", "verma", "geometry", "render"]
__version__ = "0.1.0"
