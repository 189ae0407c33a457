"""Exact computations in the uniform block permutation monoid U_k and the
lattice of its submonoids containing the symmetric group."""

__version__ = "0.1.0"
