"""Exact-arithmetic toolkit for 6-transposition groups and dihedral
Majorana algebras: coset enumeration, permutation group machinery,
transposition-system classification, the nine dihedral algebra tables and
axis/shape enumeration."""

__version__ = "0.1.0"
