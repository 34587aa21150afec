"""Exact Almansi-type decompositions of Clifford polynomials.

A slice polynomial ``f(x) = sum x^k a_k`` over the Clifford algebra R_{0,n} is
written as ``A - x^c B`` with ``A``, ``B`` zonal polyharmonic polynomials with
pole 1.  All symbolic work uses exact rationals; only :mod:`closed_form` uses
floats.
"""
from .almansi import (
    DecompositionAB,
    NotPolyharmonic,
    biharmonic_decomposition,
    check_pde_system,
    classical_almansi,
    decompose,
    decompose_cr,
    fischer_split,
    reconstruct,
)
from .clifford_core import DimensionError, Multivector, Paravector, mv_conjugate
from .diffops import cauchy_riemann, conj_cauchy_riemann, dirac, iterated_laplacian, laplacian
from .mvpoly import AxialPolynomial, MvPolynomial, from_axial, to_axial
from .slice_poly import SlicePolynomial, expand, zonal
from .textio import ParseError, format_polynomial, parse_polynomial

__all__ = [
    "AxialPolynomial",
    "DecompositionAB",
    "DimensionError",
    "Multivector",
    "MvPolynomial",
    "NotPolyharmonic",
    "Paravector",
    "ParseError",
    "SlicePolynomial",
    "biharmonic_decomposition",
    "cauchy_riemann",
    "check_pde_system",
    "classical_almansi",
    "conj_cauchy_riemann",
    "decompose",
    "decompose_cr",
    "dirac",
    "expand",
    "fischer_split",
    "format_polynomial",
    "from_axial",
    "iterated_laplacian",
    "laplacian",
    "mv_conjugate",
    "parse_polynomial",
    "reconstruct",
    "to_axial",
    "zonal",
]
