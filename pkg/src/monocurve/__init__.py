"""Exact Groebner-basis and syzygy toolkit for monomial curves in affine and projective 4-space."""

from .poly import MonomialOrder, Polynomial, default_order, homogenize, dehomogenize, normal_form
from .groebner import GroebnerBasis, buchberger_complete, is_groebner_basis, initial_ideal, codimension
from .monomial_ideal import HilbertNumerator, MonomialIdeal, hilbert_numerator, standard_monomials
from .toric import MonomialCurveSpec, acm_test, eval_parametrization, gastinger_verify, toric_ideal

__version__ = "0.1.0"
