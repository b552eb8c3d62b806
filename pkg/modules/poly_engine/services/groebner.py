"""
toricarc - Bases de Gröbner
===========================

Algoritmo de Buchberger con selección normal y criterios de Gebauer-Möller,
formas normales, monomios estándar y dimensiones graduadas del cociente.

Cada paso de reducción consume una unidad de un presupuesto; al agotarse
se lanza BudgetExceeded. El resultado es la base reducida, mónica y ordenada
por monomio principal descendente, así que es determinista.
"""

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.rings import PolyRing

from config.settings import Settings
from core.exceptions import BudgetExceeded, InfiniteDimension, NotHomogeneous
from core.utils.logger import get_logger
from modules.poly_engine.services.orders import Monomial, MonomialOrder
from modules.poly_engine.services.polynomials import (
    Poly,
    is_homogeneous,
    make_ring,
    s_polynomial,
)

log = get_logger(__name__)

Pair = Tuple[int, int]


class ReductionBudget:
    """Contador de pasos de reducción con tope."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = Settings.REDUCTION_BUDGET if limit is None else limit
        self.used = 0

    def step(self):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(
                f"Presupuesto de reducciones agotado ({self.limit} pasos)",
                details={"limit": self.limit}
            )


@dataclass(frozen=True)
class GroebnerBasis:
    """Base de Gröbner de un ideal.

    Attributes:
        generators: Polinomios de la base
        order: Orden monomial
        reduced: True si la base es reducida y mónica
        ring: Anillo de los generadores (necesario para el ideal nulo)
    """

    generators: Tuple[Poly, ...]
    order: MonomialOrder
    reduced: bool
    ring: PolyRing

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.LM for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def reduce_poly(poly: Poly, divisors: Sequence[Poly], budget: ReductionBudget) -> Poly:
    """Resto de la división completa de poly entre divisors."""
    ring = poly.ring
    domain = ring.domain
    remainder: Dict[Monomial, object] = {}
    current = poly.copy()

    while current:
        leading = current.LM
        coefficient = current.LC
        for divisor in divisors:
            quotient = ring.monomial_div(leading, divisor.LM)
            if quotient is not None:
                budget.step()
                current = current - divisor.mul_term((quotient, domain.quo(coefficient, divisor.LC)))
                break
        else:
            remainder[leading] = coefficient
            del current[leading]

    return ring.from_dict(remainder) if remainder else ring.zero


def _select(basis: List[Poly], pairs: Set[Pair]) -> Pair:
    """Estrategia normal: menor mcm de monomios principales, desempate por índices."""
    ring = basis[0].ring
    return min(
        pairs,
        key=lambda p: (ring.order(ring.monomial_lcm(basis[p[0]].LM, basis[p[1]].LM)), p),
    )


def _update(basis: List[Poly], pairs: Set[Pair], poly: Poly) -> Tuple[List[Poly], Set[Pair]]:
    """Agrega poly a la base y actualiza los pares con los criterios de Gebauer-Möller."""
    ring = poly.ring
    lcm, mul, div = ring.monomial_lcm, ring.monomial_mul, ring.monomial_div
    leading = [g.LM for g in basis]
    lm = poly.LM

    pairs = {
        (i, j) for (i, j) in pairs
        if not div(lcm(leading[i], leading[j]), lm)
        or lcm(leading[i], leading[j]) == lcm(leading[i], lm)
        or lcm(leading[i], leading[j]) == lcm(leading[j], lm)
    }

    by_lcm: Dict[Monomial, List[int]] = {}
    for i in range(len(basis)):
        by_lcm.setdefault(lcm(leading[i], lm), []).append(i)

    minimal: List[Monomial] = []
    for candidate in sorted(by_lcm, key=ring.order):
        if all(not div(candidate, other) for other in minimal):
            minimal.append(candidate)

    new_pairs = set()
    for candidate in minimal:
        # criterio del producto: mcm coprimo no genera par
        if not any(lcm(leading[i], lm) == mul(leading[i], lm) for i in by_lcm[candidate]):
            new_pairs.add((min(by_lcm[candidate]), len(basis)))

    return basis + [poly], pairs | new_pairs


def _minimalize(basis: List[Poly]) -> List[Poly]:
    ring = basis[0].ring
    minimal: List[Poly] = []
    for f in sorted(basis, key=lambda h: ring.order(h.LM)):
        if all(ring.monomial_div(f.LM, g.LM) is None for g in minimal):
            minimal.append(f)
    return minimal


def _interreduce(basis: List[Poly], budget: ReductionBudget) -> List[Poly]:
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        reduced.append(reduce_poly(g, others, budget).monic())
    return reduced


def buchberger(gens: Sequence[Poly], order: Optional[MonomialOrder] = None,
               budget: Optional[int] = None) -> GroebnerBasis:
    """
    Base de Gröbner reducida del ideal generado por gens.

    Args:
        gens: Generadores (todos en el mismo anillo)
        order: Orden monomial; si difiere del orden del anillo los
            generadores se trasladan a un anillo con ese orden
        budget: Tope de pasos de reducción (por defecto Settings.REDUCTION_BUDGET)

    Returns:
        GroebnerBasis reducida

    Raises:
        BudgetExceeded: Si se agota el presupuesto
    """
    if not gens:
        raise ValueError("Se requiere al menos un generador")

    ring = gens[0].ring
    if order is not None:
        target = make_ring([str(s) for s in ring.symbols], order)
        if target != ring:
            gens = [g.set_ring(target) for g in gens]
            ring = target
    else:
        order = MonomialOrder()

    counter = ReductionBudget(budget)
    nonzero = [g for g in gens if g]
    if not nonzero:
        return GroebnerBasis((), order, True, ring)

    basis: List[Poly] = []
    pairs: Set[Pair] = set()
    for g in nonzero:
        basis, pairs = _update(basis, pairs, g.monic())

    reductions = 0
    while pairs:
        pair = _select(basis, pairs)
        pairs.remove(pair)
        remainder = reduce_poly(s_polynomial(basis[pair[0]], basis[pair[1]]), basis, counter)
        reductions += 1
        if remainder:
            basis, pairs = _update(basis, pairs, remainder.monic())

    result = _interreduce(_minimalize(basis), counter)
    result.sort(key=lambda g: ring.order(g.LM), reverse=True)
    log.debug(
        f"Buchberger: {len(nonzero)} generadores, {reductions} pares reducidos, "
        f"{counter.used} pasos, base de {len(result)} elementos"
    )
    return GroebnerBasis(tuple(result), order, True, ring)


def normal_form(poly: Poly, basis: GroebnerBasis, budget: Optional[int] = None) -> Poly:
    """Resto de poly módulo la base; es cero si y solo si poly está en el ideal."""
    if poly.ring != basis.ring:
        poly = poly.set_ring(basis.ring)
    return reduce_poly(poly, list(basis.generators), ReductionBudget(budget))


def is_groebner(basis: GroebnerBasis, budget: Optional[int] = None) -> bool:
    """Todos los S-polinomios se reducen a cero."""
    generators = list(basis.generators)
    counter = ReductionBudget(budget)
    for f, g in itertools.combinations(generators, 2):
        if reduce_poly(s_polynomial(f, g), generators, counter):
            return False
    return True


def _finite_leading(leading: Sequence[Monomial], nvars: int) -> bool:
    pure = set()
    for lm in leading:
        support = [i for i, e in enumerate(lm) if e]
        if not support:
            return True
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == nvars


def is_finite_dimensional(basis: GroebnerBasis) -> bool:
    """El cociente es finito si cada variable tiene una potencia pura como monomio principal."""
    return _finite_leading(basis.leading_monomials, basis.ring.ngens)


def monomials_outside(leading: Sequence[Monomial], nvars: int,
                      degree_cap: Optional[int] = None) -> List[Monomial]:
    """
    Monomios en nvars variables que no son divisibles por ninguno de leading.

    Args:
        leading: Monomios principales (exponentes de longitud nvars)
        nvars: Número de variables
        degree_cap: Grado máximo; obligatorio si el complemento es infinito

    Returns:
        Monomios encontrados por recorrido en anchura desde 1 (sin ordenar)

    Raises:
        InfiniteDimension: Complemento infinito sin degree_cap
    """
    leading = [tuple(lm) for lm in leading]
    if degree_cap is None and not _finite_leading(leading, nvars):
        raise InfiniteDimension("El cociente tiene dimensión infinita; indique un grado máximo")
    if any(not any(lm) for lm in leading):
        return []

    def divisible(monomial: Monomial) -> bool:
        return any(all(m >= l for m, l in zip(monomial, lm)) for lm in leading)

    start = (0,) * nvars
    found: List[Monomial] = []
    seen = {start}
    queue = deque([start])
    while queue:
        monomial = queue.popleft()
        if divisible(monomial):
            continue
        found.append(monomial)
        for i in range(nvars):
            successor = tuple(e + int(k == i) for k, e in enumerate(monomial))
            if degree_cap is not None and sum(successor) > degree_cap:
                continue
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return found


def _standard_bfs(basis: GroebnerBasis, degree_cap: Optional[int]) -> List[Monomial]:
    ring = basis.ring
    found = monomials_outside(basis.leading_monomials, ring.ngens, degree_cap)
    return sorted(found, key=ring.order)


def standard_monomials(basis: GroebnerBasis, degree_cap: Optional[int] = None) -> List[Monomial]:
    """
    Monomios no divisibles por ningún monomio principal.

    Args:
        basis: Base de Gröbner reducida
        degree_cap: Grado máximo si el cociente es de dimensión infinita

    Returns:
        Lista completa si el cociente es finito; si no, los de grado <= degree_cap.
        Ordenada de forma ascendente según el orden del anillo.

    Raises:
        InfiniteDimension: Cociente infinito sin degree_cap
    """
    if is_finite_dimensional(basis):
        return _standard_bfs(basis, None)
    if degree_cap is None:
        raise InfiniteDimension("El cociente tiene dimensión infinita; indique un grado máximo")
    return _standard_bfs(basis, degree_cap)


def quotient_dimension(basis: GroebnerBasis) -> int:
    return len(standard_monomials(basis))


def graded_dimensions(basis: GroebnerBasis, cutoff: int) -> Tuple[int, ...]:
    """
    Dimensiones de las piezas graduadas del cociente (grado estándar).

    Args:
        basis: Base de Gröbner de un ideal homogéneo
        cutoff: Grado máximo

    Returns:
        (dim_0, ..., dim_cutoff)

    Raises:
        NotHomogeneous: Si algún generador no es homogéneo
    """
    if not all(is_homogeneous(g) for g in basis.generators):
        raise NotHomogeneous("graded_dimensions requiere un ideal homogéneo")

    dimensions = [0] * (cutoff + 1)
    for monomial in _standard_bfs(basis, cutoff):
        dimensions[sum(monomial)] += 1
    return tuple(dimensions)


__all__ = [
    'GroebnerBasis',
    'ReductionBudget',
    'reduce_poly',
    'buchberger',
    'normal_form',
    'is_groebner',
    'is_finite_dimensional',
    'monomials_outside',
    'standard_monomials',
    'quotient_dimension',
    'graded_dimensions',
]
