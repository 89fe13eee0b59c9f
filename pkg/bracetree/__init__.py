"""
bracetree - exact computer algebra on decorated rooted trees.

Free brace, pre-Lie and non-associative permutative algebras, their
Poincare-Hilbert series, and degree-by-degree freeness certificates.
"""

__version__ = "0.1.0"
