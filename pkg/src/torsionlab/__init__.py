"""Desk-scale verification lab for p-adic lift counting and local torsion.

Subpackages cover exact arithmetic in F_{p^d} and W(F_{p^d})/p^2, semilinear
module algebra, exhaustive lift enumeration, elliptic curve point groups over
truncated Witt rings, bounded-height rational point statistics, and the
prime-averaged experiments tying them together.
"""

__version__ = "0.1.0"
