"""
toricarc - Poly Engine Module
=============================

Polinomios exactos sobre Q, órdenes monomiales, algoritmo de Buchberger,
formas normales, monomios estándar y dimensiones graduadas.

Submodules:
    - services.orders: MonomialOrder y su traducción a sympy
    - services.polynomials: anillos, texto canónico, sustituciones
    - services.groebner: Buchberger con presupuesto, formas normales

Example:
    Base de Gröbner en orden lex::

        from modules.poly_engine.services.orders import LEX
        from modules.poly_engine.services.polynomials import make_ring, parse_poly
        from modules.poly_engine.services.groebner import buchberger

        ring = make_ring(["y", "x"], LEX)
        basis = buchberger([parse_poly("y - x^2", ring), parse_poly("x*y - 1", ring)])
        # y - x^2, x^3 - 1

Version:
    1.0.0
"""

from modules.poly_engine.services.groebner import (
    GroebnerBasis, buchberger, graded_dimensions, normal_form, standard_monomials,
)
from modules.poly_engine.services.orders import MonomialOrder
from modules.poly_engine.services.polynomials import format_poly, make_ring, parse_poly

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "make_ring",
    "format_poly",
    "parse_poly",
    "buchberger",
    "normal_form",
    "standard_monomials",
    "graded_dimensions",
]
