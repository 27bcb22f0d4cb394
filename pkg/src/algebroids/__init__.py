"""Exact symbolic calculus on Lie algebroids over polynomial charts.

The package computes with algebroids whose anchor and structure functions are
polynomials with rational coefficients, so every identity it checks — graded
Jacobi, anchored Leibniz rules, Poisson self-brackets, lift compatibilities —
is decided exactly: a bracket either is the zero tensor or it is not.

Layering, bottom up:

``ring``
    charts and sparse exact polynomials, parsing and canonical printing;
``tensor``
    graded sections (multivectors, forms, vector-valued forms, symmetric
    multivectors) with wedge / symmetric product / contraction;
``algebroid``
    anchored brackets, validation, tangent and cotangent lifts;
``calculus``
    the exterior derivative, Lie differentials, and the four graded brackets;
``poisson``
    bivectors, the cotangent algebroid of a Poisson structure, and the
    derived operators built from its bundle map;
``lifts``
    vertical / complete lifts of sections and their transports to the
    canonical (tangent-bundle) picture;
``suites``
    the named identity suites that the test-suite and the CLI both run;
``model`` / ``cli``
    the JSON model format and the command-line front end.
"""

from .errors import AlgebroidError
from .ring import Chart, Poly, parse_poly, poly_to_string

__all__ = ["AlgebroidError", "Chart", "Poly", "parse_poly", "poly_to_string"]

__version__ = "0.1.0"
