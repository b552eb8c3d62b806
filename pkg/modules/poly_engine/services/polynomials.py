"""
toricarc - Polinomios
=====================

Polinomios exactos sobre Q representados con PolyRing/PolyElement de
sympy, y su serialización canónica en texto.

Formato canónico: términos en orden descendente según el orden del anillo,
coeficientes como fracciones exactas y monomios como "x1^2*x2"::

    x1*x2*x3 - q1
    3/2*x1^2 - x2 + 1
"""

import re
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, List, Optional, Sequence

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.rings import PolyElement, PolyRing

from core.exceptions import ParseError
from core.utils.logger import get_logger
from modules.poly_engine.services.orders import DEGREVLEX, Monomial, MonomialOrder

log = get_logger(__name__)

Poly = PolyElement

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def make_ring(names: Sequence[str], order: MonomialOrder = DEGREVLEX) -> PolyRing:
    """
    Anillo de polinomios Q[names] con el orden indicado.

    Args:
        names: Nombres de las variables, en orden
        order: Orden monomial

    Returns:
        PolyRing de sympy
    """
    return PolyRing(list(names), QQ, order.sympy_order(len(names)))


def to_fraction(coefficient) -> Fraction:
    """Convierte un elemento de QQ (python o gmpy) en Fraction."""
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def format_monomial(ring: PolyRing, monomial: Monomial) -> str:
    factors = []
    for symbol, exponent in zip(ring.symbols, monomial):
        if exponent == 1:
            factors.append(str(symbol))
        elif exponent > 1:
            factors.append(f"{symbol}^{exponent}")
    return "*".join(factors) if factors else "1"


def format_poly(poly: Poly) -> str:
    """
    Texto canónico de un polinomio.

    Args:
        poly: Polinomio

    Returns:
        Texto, "0" para el polinomio nulo
    """
    if not poly:
        return "0"

    pieces = []
    for index, (monomial, coefficient) in enumerate(poly.terms()):
        value = to_fraction(coefficient)
        magnitude = abs(value)
        if not any(monomial):
            body = str(magnitude)
        elif magnitude == 1:
            body = format_monomial(poly.ring, monomial)
        else:
            body = f"{magnitude}*{format_monomial(poly.ring, monomial)}"

        if index == 0:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f" - {body}" if value < 0 else f" + {body}")
    return "".join(pieces)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """
    Interpreta un polinomio en texto ('^' o '**' para potencias).

    Args:
        text: Texto del polinomio
        ring: Anillo destino (define las variables válidas)

    Returns:
        Polinomio en ring

    Raises:
        ParseError: Sintaxis inválida o variables ajenas al anillo
    """
    local_dict: Dict[str, Symbol] = {str(s): s for s in ring.symbols}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise ParseError(f"Polinomio inválido '{text}': {e}") from e

    unknown = sorted(str(s) for s in getattr(expr, "free_symbols", ()) if s not in ring.symbols)
    if unknown:
        raise ParseError(f"Variables desconocidas en '{text}': {', '.join(unknown)}")

    try:
        return ring.from_expr(expr)
    except (ValueError, TypeError, AttributeError) as e:
        raise ParseError(f"'{text}' no es un polinomio en {', '.join(map(str, ring.symbols))}") from e


def _natural_key(name: str):
    return [int(piece) if piece.isdigit() else piece for piece in re.split(r"(\d+)", name)]


def parse_poly_system(texts: Sequence[str], names: Optional[Sequence[str]] = None,
                      order: MonomialOrder = DEGREVLEX) -> List[Poly]:
    """
    Interpreta varios polinomios en un anillo común.

    Args:
        texts: Un polinomio por elemento
        names: Variables del anillo; si se omiten se infieren del texto
            (orden natural: u2 antes que u10)
        order: Orden monomial del anillo

    Returns:
        Lista de polinomios en el mismo anillo

    Raises:
        ParseError: Sintaxis inválida o ninguna variable
    """
    if names is None:
        found = set()
        for text in texts:
            try:
                expr = parse_expr(text, transformations=_TRANSFORMATIONS)
            except (SyntaxError, TokenError, TypeError, ValueError) as e:
                raise ParseError(f"Polinomio inválido '{text}': {e}") from e
            found.update(str(s) for s in getattr(expr, "free_symbols", ()))
        names = sorted(found, key=_natural_key)
    if not names:
        raise ParseError("Las relaciones no contienen variables")

    ring = make_ring(names, order)
    return [parse_poly(text, ring) for text in texts]


def substitute(poly: Poly, images: Sequence[Poly], ring: PolyRing) -> Poly:
    """
    Homomorfismo de anillos x_i -> images[i].

    Args:
        poly: Polinomio en el anillo de origen
        images: Imagen de cada variable del origen (en ring)
        ring: Anillo destino

    Returns:
        Polinomio en ring
    """
    if len(images) != poly.ring.ngens:
        raise ValueError(f"Se esperaban {poly.ring.ngens} imágenes, se recibieron {len(images)}")

    powers: Dict[tuple, Poly] = {}

    def power(i: int, exponent: int) -> Poly:
        if (i, exponent) not in powers:
            powers[(i, exponent)] = images[i] ** exponent
        return powers[(i, exponent)]

    result = ring.zero
    for monomial, coefficient in poly.terms():
        term = ring.ground_new(coefficient)
        for i, exponent in enumerate(monomial):
            if exponent:
                term = term * power(i, exponent)
        result += term
    return result


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """S-polinomio de f y g (ambos no nulos)."""
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    return (
        f.monic().mul_monom(ring.monomial_div(lcm, f.LM))
        - g.monic().mul_monom(ring.monomial_div(lcm, g.LM))
    )


def total_degree(poly: Poly) -> int:
    """Grado total (-1 para el polinomio nulo)."""
    return max((sum(m) for m in poly.itermonoms()), default=-1)


def is_homogeneous(poly: Poly) -> bool:
    return len({sum(m) for m in poly.itermonoms()}) <= 1


def monomial_poly(ring: PolyRing, exponents: Sequence[int]) -> Poly:
    """El monomio x^exponents con coeficiente 1."""
    return ring.term_new(tuple(exponents), QQ.one)


def constant_poly(ring: PolyRing, value: Fraction) -> Poly:
    """Polinomio constante con valor racional exacto."""
    value = Fraction(value)
    return ring.ground_new(QQ(value.numerator, value.denominator))


__all__ = [
    'Poly',
    'make_ring',
    'to_fraction',
    'format_monomial',
    'format_poly',
    'parse_poly',
    'parse_poly_system',
    'substitute',
    's_polynomial',
    'total_degree',
    'is_homogeneous',
    'monomial_poly',
    'constant_poly',
]
