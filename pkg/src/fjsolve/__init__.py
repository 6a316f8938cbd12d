"""Siegel modular forms of genus 2 from symmetric formal Fourier-Jacobi polynomials.

Exact arithmetic throughout: Fourier-Jacobi coefficients are Jacobi forms built
from the weak generators, and the symmetry conditions under GL2(Z) are solved
as a rational linear system.
"""
from .arith import HalfIntegralMatrix2, Unimodular2, act, min_represented, reduce
from .bounds import SlopeValue, eichler_blichfeldt, slope, truncation_precision
from .formal import (FourierJacobiPolynomial, SymmetryReport, check_symmetry, coefficient, construct,
                     fj_mul, phi_operator, vanishing_order)
from .jacobi import (JacobiExpansion, ThetaComponentIndex, ThetaDecomposition, jacobi_basis, jacobi_mul,
                     theta_component, theta_decompose, theta_recompose, weak_generators)
from .qseries import QExpansion, delta, eisenstein, mk_basis, series_mul
from .serialize import deserialize, serialize
from .solver import (ConstraintSystem, SymmetricBasis, build_constraints, dim_check, nullspace,
                     symmetric_basis)

__version__ = "0.1.0"
