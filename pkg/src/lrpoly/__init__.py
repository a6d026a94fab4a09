"""Exact-arithmetic library for Littlewood-Richardson polynomials of double Schur functions.

The package computes the structure coefficients of products of double Schur
functions in several independent ways (raising-operator calculus, a stable
Pieri rule, reverse-tableau rules, and a brute-force polynomial oracle) and
cross-validates them against each other.
"""

from .shapes import (
    iv,
    is_partition,
    is_composition,
    is_horizontal_strip,
    apply_raising,
    apply_rbar,
    lambda_omega,
)
from .apoly import APoly
from .schursum import SchurSum

__all__ = [
    "iv",
    "is_partition",
    "is_composition",
    "is_horizontal_strip",
    "apply_raising",
    "apply_rbar",
    "lambda_omega",
    "APoly",
    "SchurSum",
]
