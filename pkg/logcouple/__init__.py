"""Top-level package for the logarithmic asymptotic couple."""

__author__ = """logcouple developers"""
__version__ = '0.1.0'


from logcouple.couple import (S0, PsiElement, chi, integral, iterate_s, pred,
                              prime, psi, psi_element, succ)
from logcouple.normalize import solve, term_to_piecewise
from logcouple.terms import evaluate, parse, parse_condition, parse_term
from logcouple.vector import INF, ZERO, LogVector, parse_vector
