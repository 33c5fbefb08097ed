"""Rationally weighted Hurwitz numbers and their hypergeometric tau functions.

Exact combinatorial computation, series-level verification of the quantum
spectral curve, Mellin-Barnes evaluation of the associated Meijer-G basis,
and numerical confirmation of the determinantal matrix-integral
representation.
"""

__version__ = "0.1.0"
