"""Double Schubert polynomials for the classical groups.

The package computes type A, B, C and D double Schubert polynomials from
divided differences, checks closed formulas and identities among them, and
evaluates the associated degeneracy locus classes.
"""
from ._backend import BACKEND
from .divided import apply_element, apply_generator, apply_word
from .kernels import delta, ptilde, qtilde, reproducing_kernel
from .polynomial import Polynomial, X, Y
from .schubert import closed_max_grassmannian, double_schubert, single_schubert
from .weyl import SignedPermutation, WeylGroup, max_grassmannian, parse_element

__all__ = [
    "BACKEND",
    "Polynomial",
    "SignedPermutation",
    "WeylGroup",
    "X",
    "Y",
    "apply_element",
    "apply_generator",
    "apply_word",
    "closed_max_grassmannian",
    "delta",
    "double_schubert",
    "max_grassmannian",
    "parse_element",
    "ptilde",
    "qtilde",
    "reproducing_kernel",
    "single_schubert",
]
