"""
toricarc - Álgebra de Jets
==========================

Relaciones del esquema de jets de orden m: cada variable base u_j se
sustituye por la serie truncada u_j(t) = sum_{n<=m} u_{j,n} t^n y la
relación (k, n) es el coeficiente de t^n en f_k(u_1(t), ..., u_p(t)).

Las variables de jets se llaman "u1_0", "u1_1", ... y heredan el grado de
su variable base (deg u_{j,n} = deg u_j).
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from core.exceptions import InputError
from core.utils.logger import get_logger
from modules.poly_engine.services.orders import DEGREVLEX
from modules.poly_engine.services.polynomials import Poly, make_ring

log = get_logger(__name__)


def jet_name(base: str, n: int) -> str:
    return f"{base}_{n}"


class TruncatedSeries:
    """Serie c[0] + c[1] t + ... + c[m] t^m con coeficientes polinomiales."""

    def __init__(self, coefficients: Sequence[Poly], order: int):
        ring = coefficients[0].ring if coefficients else None
        padded = list(coefficients[:order + 1])
        while len(padded) < order + 1:
            padded.append(ring.zero)
        self.c = padded
        self.order = order

    @classmethod
    def constant(cls, value: Poly, order: int) -> "TruncatedSeries":
        return cls([value], order)

    def __getitem__(self, n: int) -> Poly:
        return self.c[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries([a + b for a, b in zip(self.c, other.c)], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        ring = self.c[0].ring
        product = [ring.zero for _ in range(self.order + 1)]
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                if other.c[j]:
                    product[i + j] += a * other.c[j]
        return TruncatedSeries(product, self.order)

    def scale(self, coefficient) -> "TruncatedSeries":
        return TruncatedSeries([a * coefficient for a in self.c], self.order)


@dataclass(frozen=True)
class JetPresentation:
    """Presentación truncada del álgebra de arcos.

    Attributes:
        base_vars: Variables base u_1..u_p
        order: Orden de truncación m
        jet_vars: u_{j,n} agrupadas por variable base, 0 <= n <= m
        relations: Relaciones en orden (k, n)
        ring: Anillo de las variables de jets
        degrees: Grado de cada variable de jets (el de su variable base)
    """

    base_vars: Tuple[str, ...]
    order: int
    jet_vars: Tuple[str, ...]
    relations: Tuple[Poly, ...]
    ring: PolyRing
    degrees: Tuple[int, ...]

    def relation(self, k: int, n: int) -> Poly:
        return self.relations[k * (self.order + 1) + n]


def jet_ring(base_vars: Sequence[str], order: int) -> PolyRing:
    names = [jet_name(base, n) for base in base_vars for n in range(order + 1)]
    return make_ring(names, DEGREVLEX)


def _jet_series(ring: PolyRing, j: int, order: int) -> TruncatedSeries:
    return TruncatedSeries([ring.gens[j * (order + 1) + n] for n in range(order + 1)], order)


def jet_relations(base_relations: Sequence[Poly], m: int,
                  degrees: Optional[Sequence[int]] = None) -> JetPresentation:
    """
    Genera las relaciones de jets de orden m.

    Args:
        base_relations: Polinomios f_k en las variables base (mismo anillo)
        m: Orden de truncación (>= 0)
        degrees: Grados de las variables base (por defecto 1)

    Returns:
        JetPresentation con len(base_relations) * (m + 1) relaciones
    """
    if m < 0:
        raise InputError(f"El orden de truncación debe ser >= 0 (recibido {m})")
    if not base_relations:
        raise InputError("Se requiere al menos una relación base")

    base_ring = base_relations[0].ring
    base_vars = tuple(str(s) for s in base_ring.symbols)
    degrees = tuple(degrees) if degrees is not None else (1,) * len(base_vars)
    ring = jet_ring(base_vars, m)
    series = [_jet_series(ring, j, m) for j in range(len(base_vars))]
    one = TruncatedSeries.constant(ring.one, m)

    powers: Dict[Tuple[int, int], TruncatedSeries] = {}

    def power(j: int, exponent: int) -> TruncatedSeries:
        key = (j, exponent)
        if key not in powers:
            powers[key] = series[j] if exponent == 1 else power(j, exponent - 1) * series[j]
        return powers[key]

    relations: List[Poly] = []
    for f in base_relations:
        total = TruncatedSeries([ring.zero], m)
        for monomial, coefficient in f.terms():
            term = one
            for j, exponent in enumerate(monomial):
                if exponent:
                    term = term * power(j, exponent)
            total = total + term.scale(ring.domain.convert(coefficient, base_ring.domain))
        relations.extend(total.c)

    jet_vars = tuple(str(s) for s in ring.symbols)
    jet_degrees = tuple(degrees[j] for j in range(len(base_vars)) for _ in range(m + 1))
    log.debug(f"Jets de orden {m}: {len(base_relations)} relaciones base -> {len(relations)}")
    return JetPresentation(base_vars, m, jet_vars, tuple(relations), ring, jet_degrees)


__all__ = [
    'TruncatedSeries',
    'JetPresentation',
    'jet_name',
    'jet_ring',
    'jet_relations',
]
