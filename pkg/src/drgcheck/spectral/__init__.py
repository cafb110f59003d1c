"""Exact spectra of intersection matrices."""

from .algebraic import AlgebraicNumber, format_exact
from .spectrum import (
    RootExpression,
    SpectralDefect,
    Spectrum,
    TridiagonalMatrix,
    eigenvalues,
    equals_minus_one,
    intersection_matrix,
    multiplicities,
    spectrum,
)

__all__ = [
    "AlgebraicNumber",
    "RootExpression",
    "SpectralDefect",
    "Spectrum",
    "TridiagonalMatrix",
    "eigenvalues",
    "equals_minus_one",
    "format_exact",
    "intersection_matrix",
    "multiplicities",
    "spectrum",
]
