"""
toricarc - Presentaciones de Cohomología
========================================

Presentación clásica de H^*(X) (formas lineales más monomios de
Stanley-Reisner) y presentación cuántica de Batyrev (las mismas formas
lineales más un binomio prod x_i^{beta_i(a)} - q^a por cada elemento a de
la base de Hilbert de A_+).

En la versión simbólica los parámetros q1..qr son variables de un segundo
bloque del orden y siempre se agrega qinv con la relación
qinv*q1*...*qr - 1: el ideal queda saturado respecto de q1*...*qr, los
coeficientes principales en q son unidades y q^a es siempre un monomio.
Para abanicos Fano los únicos monomios principales con q son los de esa
relación.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from core.exceptions import InvalidQSpec, MismatchWithHVector, NotFano, ZeroQSpec
from core.utils.logger import get_logger
from modules.cohomology_rings.services.cox_data import CoxData
from modules.fan_geometry.services.combinatorics import h_vector
from modules.poly_engine.services.groebner import GroebnerBasis, buchberger, graded_dimensions
from modules.poly_engine.services.orders import DEGREVLEX, MonomialOrder, block_order
from modules.poly_engine.services.polynomials import (
    Poly, constant_poly, format_poly, make_ring, monomial_poly,
)

log = get_logger(__name__)

CLASSICAL = "classical"
QUANTUM_SYMBOLIC = "quantum-symbolic"
QUANTUM_SPECIALIZED = "quantum-specialized"


@dataclass(frozen=True)
class Presentation:
    """Presentación de un anillo como cociente de Q[x1..xN] (o Q[x, q]).

    Attributes:
        num_vars: Número de variables x
        relations: Generadores del ideal
        kind: 'classical', 'quantum-symbolic' o 'quantum-specialized'
        q_spec: Valores de q1..qr si la presentación está especializada
        ring: Anillo de los polinomios
        order: Orden monomial del anillo
        warnings: Advertencias (p. ej. abanico no Fano aceptado con bandera)
    """

    num_vars: int
    relations: Tuple[Poly, ...]
    kind: str
    q_spec: Optional[Tuple[Fraction, ...]]
    ring: PolyRing
    order: MonomialOrder = DEGREVLEX
    warnings: Tuple[str, ...] = field(default=())

    def relation_texts(self) -> List[str]:
        return [format_poly(p) for p in self.relations]


def x_names(cd: CoxData) -> List[str]:
    return [f"x{i + 1}" for i in range(cd.n_rays)]


def q_names(cd: CoxData) -> List[str]:
    return [f"q{j + 1}" for j in range(cd.b_rank)]


def linear_relations(cd: CoxData, ring: PolyRing) -> List[Poly]:
    """sum_i <m_j, v_i> x_i para la base estándar m_j de M = Z^d."""
    relations = []
    for j in range(cd.dim):
        form = ring.zero
        for i, ray in enumerate(cd.fan.rays):
            if ray[j]:
                form += ring.gens[i] * ray[j]
        relations.append(form)
    return relations


def x_monomial(cd: CoxData, point: Sequence[int], ring: PolyRing) -> Poly:
    """prod_i x_i^{beta_i(a)} en un anillo cuyas primeras N variables son x."""
    image = cd.require_in_a_plus(point)
    exponents = list(image) + [0] * (ring.ngens - cd.n_rays)
    return monomial_poly(ring, exponents)


def specialize_q(q_spec: Sequence[Fraction], point: Sequence[int]) -> Fraction:
    """c^a = prod_j c_j^{a_j} (exponentes negativos permitidos)."""
    value = Fraction(1)
    for c, exponent in zip(q_spec, point):
        value *= Fraction(c) ** exponent
    return value


def q_monomial(cd: CoxData, point: Sequence[int], ring: PolyRing) -> Poly:
    """q^a como monomio del anillo simbólico (q_j^{-1} = qinv * prod_{l != j} q_l)."""
    n, r = cd.n_rays, cd.b_rank
    exponents = [0] * ring.ngens
    for j, a_j in enumerate(point):
        if a_j >= 0:
            exponents[n + j] += a_j
        else:
            exponents[n + r] += -a_j
            for l in range(r):
                if l != j:
                    exponents[n + l] += -a_j
    return monomial_poly(ring, exponents)


def laurent_relation(cd: CoxData, ring: PolyRing) -> Poly:
    """qinv*q1*...*qr - 1 en el anillo simbólico."""
    return monomial_poly(ring, [0] * cd.n_rays + [1] * (cd.b_rank + 1)) - 1


def symbolic_ring(cd: CoxData) -> Tuple[PolyRing, MonomialOrder]:
    """Anillo Q[x1..xN, q1..qr, qinv] con orden producto (x primero)."""
    names = x_names(cd) + q_names(cd) + ["qinv"]
    order = block_order((cd.n_rays, len(names) - cd.n_rays))
    return make_ring(names, order), order


def check_q_spec(cd: CoxData, q_spec: Sequence) -> Tuple[Fraction, ...]:
    """Valida longitud y que los valores sean no nulos."""
    values = tuple(Fraction(c) for c in q_spec)
    if len(values) != cd.b_rank:
        raise InvalidQSpec(f"Se esperaban {cd.b_rank} valores de q, se recibieron {len(values)}")
    if any(c == 0 for c in values):
        raise ZeroQSpec("Los valores de q deben ser no nulos (C[A] es un anillo de Laurent)")
    return values


def classical_presentation(cd: CoxData) -> Presentation:
    """
    Presentación clásica de H^*(X, Q).

    Args:
        cd: Datos de Cox

    Returns:
        Presentation con las formas lineales y un monomio libre de cuadrados
        por colección primitiva
    """
    ring = make_ring(x_names(cd), DEGREVLEX)
    relations = linear_relations(cd, ring)
    for collection in cd.primitive_collections:
        exponents = [int(i in collection) for i in range(cd.n_rays)]
        relations.append(monomial_poly(ring, exponents))
    return Presentation(cd.n_rays, tuple(relations), CLASSICAL, None, ring, DEGREVLEX)


def classical_groebner(cd: CoxData, budget: Optional[int] = None) -> GroebnerBasis:
    presentation = classical_presentation(cd)
    return buchberger(list(presentation.relations), presentation.order, budget)


def betti_numbers(cd: CoxData, budget: Optional[int] = None) -> Tuple[int, ...]:
    """
    Dimensiones graduadas del cociente clásico (grado k = cohomología 2k).

    Args:
        cd: Datos de Cox
        budget: Tope de reducciones

    Returns:
        (b_0, ..., b_d)

    Raises:
        MismatchWithHVector: Si no coinciden con el h-vector del abanico
    """
    basis = classical_groebner(cd, budget)
    betti = graded_dimensions(basis, cd.dim)
    expected = h_vector(cd.fan)
    if betti != expected:
        raise MismatchWithHVector(
            f"Betti {betti} distinto del h-vector {expected} para {cd.fan.name}",
            details={"betti": betti, "h_vector": expected}
        )
    log.debug(f"Betti de {cd.fan.name}: {betti}")
    return betti


def quantum_presentation(cd: CoxData, q_spec: Optional[Sequence] = None,
                         allow_non_fano: bool = False) -> Presentation:
    """
    Presentación cuántica de Batyrev.

    Args:
        cd: Datos de Cox
        q_spec: Valores no nulos de q1..qr; None para la versión simbólica
        allow_non_fano: Acepta abanicos no Fano con una advertencia

    Returns:
        Presentation cuántica (simbólica o especializada)

    Raises:
        NotFano: Abanico no Fano sin allow_non_fano
        ZeroQSpec, InvalidQSpec: Especialización inválida
    """
    warnings: List[str] = []
    if not cd.is_fano:
        if not allow_non_fano:
            raise NotFano(f"{cd.fan.name} no es Fano; use --allow-non-fano para continuar")
        message = (f"{cd.fan.name} no es Fano: la presentación de Batyrev se construye, "
                   f"pero su rango no tiene por qué coincidir con HQ(X)")
        log.warning(message)
        warnings.append(message)

    if q_spec is not None:
        values = check_q_spec(cd, q_spec)
        ring = make_ring(x_names(cd), DEGREVLEX)
        order = DEGREVLEX
        relations = linear_relations(cd, ring)
        for a in cd.semigroup.hilbert_basis:
            relations.append(x_monomial(cd, a, ring) - constant_poly(ring, specialize_q(values, a)))
        kind = QUANTUM_SPECIALIZED
    else:
        values = None
        ring, order = symbolic_ring(cd)
        relations = linear_relations(cd, ring)
        for a in cd.semigroup.hilbert_basis:
            relations.append(x_monomial(cd, a, ring) - q_monomial(cd, a, ring))
        relations.append(laurent_relation(cd, ring))
        kind = QUANTUM_SYMBOLIC

    return Presentation(cd.n_rays, tuple(relations), kind, values, ring, order, tuple(warnings))


def binomial_relation(cd: CoxData, point: Sequence[int], ring: PolyRing) -> Poly:
    """prod_i x_i^{beta_i(a)} - q^a en el anillo simbólico, para cualquier a en A_+."""
    return x_monomial(cd, point, ring) - q_monomial(cd, point, ring)


__all__ = [
    'Presentation',
    'CLASSICAL',
    'QUANTUM_SYMBOLIC',
    'QUANTUM_SPECIALIZED',
    'x_names',
    'q_names',
    'linear_relations',
    'x_monomial',
    'q_monomial',
    'specialize_q',
    'laurent_relation',
    'symbolic_ring',
    'check_q_spec',
    'classical_presentation',
    'classical_groebner',
    'betti_numbers',
    'quantum_presentation',
    'binomial_relation',
]
