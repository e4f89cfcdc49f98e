"""Equivariant localization engine for diagonalizable group actions."""

__version__ = "1.0.0"
