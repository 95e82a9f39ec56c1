"""slcc: exact calculus of special linear characteristic classes.

A small computer-algebra engine that expands, reduces and machine-verifies
the polynomial identities behind Euler/Borel class calculus on formal special
linear bundles: symmetric-function identities, Weyl-invariant spanning sets
with constructive witnesses, and generators-and-relations presentations of
the cohomology rings of special linear Grassmannians, flag varieties and
classifying spaces, each certified by Groebner normal forms and Hilbert
series.  Everything is exact (big integers and rationals); nothing floats.
"""

from .polyring import ParseError, Polynomial, RingSpec, parse_poly

__version__ = "0.1.0"

__all__ = ["ParseError", "Polynomial", "RingSpec", "parse_poly", "__version__"]
