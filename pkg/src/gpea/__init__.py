"""Finite generalized pseudoeffect algebras: tables, exocenter, center, covers and type theory."""

__version__ = "0.1.0"
