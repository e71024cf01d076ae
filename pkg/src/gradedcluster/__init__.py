"""Workbench for graded cluster algebras: exact mutation, classification,
census enumeration and surface combinatorics."""

__version__ = "0.1.0"

from .core import (ExchangeMatrix, Grading, GradedSeed, MutationPath,
                   apply_path, grading_basis, is_valid_grading,
                   mutate_degrees, mutate_denominators, mutate_matrix)

__all__ = [
    "ExchangeMatrix", "Grading", "GradedSeed", "MutationPath",
    "apply_path", "grading_basis", "is_valid_grading",
    "mutate_degrees", "mutate_denominators", "mutate_matrix",
]
