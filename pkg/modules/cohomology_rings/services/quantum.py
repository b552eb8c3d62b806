"""
toricarc - Anillo de Cohomología Cuántica
=========================================

Bases de Gröbner de la presentación cuántica, productos cuánticos de las
clases [Z_i], tabla de productos y la verificación de rango: para valores
aleatorios (con semilla) de q, la dimensión del cociente especializado
debe ser la suma de los números de Betti.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy.polys.orderings import grevlex

from config.settings import Settings
from core.exceptions import InputError, RankMismatch
from core.utils.logger import get_logger
from modules.cohomology_rings.services.cox_data import CoxData
from modules.cohomology_rings.services.presentations import (
    Presentation,
    betti_numbers,
    check_q_spec,
    classical_groebner,
    quantum_presentation,
)
from modules.poly_engine.services.groebner import (
    GroebnerBasis,
    buchberger,
    monomials_outside,
    normal_form,
    quotient_dimension,
)
from modules.poly_engine.services.orders import Monomial
from modules.poly_engine.services.polynomials import Poly, monomial_poly

log = get_logger(__name__)


@dataclass(frozen=True)
class RankTrial:
    """Una especialización de q y la dimensión obtenida."""

    index: int
    q_spec: Tuple[Fraction, ...]
    dimension: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.dimension == self.expected


@dataclass(frozen=True)
class RankCheckReport:
    """Resultado de quantum_rank_check."""

    expected: int
    trials: Tuple[RankTrial, ...]
    fano: bool
    warnings: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(trial.ok for trial in self.trials)


@dataclass(frozen=True)
class ProductEntry:
    factors: Tuple[int, ...]
    value: Poly


def random_q_spec(rank: int, rng: random.Random, height: Optional[int] = None) -> Tuple[Fraction, ...]:
    """
    Valores racionales no nulos +-p/q con 1 <= p, q <= height.

    Args:
        rank: Número de valores (rango de B)
        rng: Generador con semilla
        height: Cota de numerador y denominador (por defecto Settings.Q_SPEC_HEIGHT)

    Returns:
        Tupla de fracciones no nulas
    """
    height = Settings.Q_SPEC_HEIGHT if height is None else height
    values = []
    for _ in range(rank):
        sign = rng.choice((1, -1))
        values.append(Fraction(sign * rng.randint(1, height), rng.randint(1, height)))
    return tuple(values)


def quantum_groebner(presentation: Presentation, budget: Optional[int] = None) -> GroebnerBasis:
    """Base de Gröbner reducida de una presentación cuántica."""
    basis = buchberger(list(presentation.relations), presentation.order, budget)
    log.debug(f"Base cuántica ({presentation.kind}): {len(basis)} generadores")
    return basis


def quantum_standard_monomials(cd: CoxData, basis: GroebnerBasis) -> List[Monomial]:
    """
    Monomios en x1..xN que forman una base del anillo cuántico simbólico sobre Q[q, q^-1].

    Solo cuentan los monomios principales sin q; en un abanico Fano el único
    generador restante es qinv*q1*...*qr - 1.

    Args:
        cd: Datos de Cox
        basis: Base de Gröbner de la presentación simbólica

    Returns:
        Exponentes en x, ordenados de forma ascendente (degrevlex)

    Raises:
        InfiniteDimension: Si el anillo no es finito sobre Q(q)
    """
    n = cd.n_rays
    leading = [lm[:n] for lm in basis.leading_monomials if not any(lm[n:])]
    return sorted(monomials_outside(leading, n), key=grevlex)


def _factor_monomial(cd: CoxData, factors: Sequence[int], basis: GroebnerBasis) -> Poly:
    exponents = [0] * basis.ring.ngens
    for index in factors:
        if not 1 <= index <= cd.n_rays:
            raise InputError(f"Índice de clase fuera de rango: {index} (use 1..{cd.n_rays})")
        exponents[index - 1] += 1
    return monomial_poly(basis.ring, exponents)


def quantum_product(cd: CoxData, factors: Sequence[int], q_spec: Optional[Sequence] = None,
                    allow_non_fano: bool = False, budget: Optional[int] = None,
                    basis: Optional[GroebnerBasis] = None) -> Poly:
    """
    Producto cuántico de clases [Z_i] como forma normal de prod x_i.

    Args:
        cd: Datos de Cox
        factors: Índices de las clases, base 1 (x1..xN)
        q_spec: Especialización de q; None para coeficientes simbólicos
        allow_non_fano: Acepta abanicos no Fano
        budget: Tope de reducciones
        basis: Base cuántica ya calculada (opcional)

    Returns:
        Polinomio en monomios estándar con coeficientes en q1..qr y qinv

    Raises:
        BudgetExceeded: Si Buchberger agota el presupuesto
    """
    if basis is None:
        basis = quantum_groebner(quantum_presentation(cd, q_spec, allow_non_fano), budget)
    return normal_form(_factor_monomial(cd, factors, basis), basis, budget)


def quantum_product_table(cd: CoxData, q_spec: Optional[Sequence] = None,
                          max_factors: int = 3, allow_non_fano: bool = False,
                          budget: Optional[int] = None,
                          basis: Optional[GroebnerBasis] = None) -> List[ProductEntry]:
    """Productos de todos los pares (y tríos si max_factors >= 3) de clases [Z_i]."""
    if basis is None:
        basis = quantum_groebner(quantum_presentation(cd, q_spec, allow_non_fano), budget)
    entries = []
    for size in range(2, max_factors + 1):
        for factors in itertools.combinations_with_replacement(range(1, cd.n_rays + 1), size):
            value = quantum_product(cd, factors, budget=budget, basis=basis)
            entries.append(ProductEntry(factors, value))
    return entries


def classical_product(cd: CoxData, factors: Sequence[int], budget: Optional[int] = None) -> Poly:
    """Producto clásico de clases [Z_i] (forma normal en la presentación clásica)."""
    basis = classical_groebner(cd, budget)
    return normal_form(_factor_monomial(cd, factors, basis), basis, budget)


def specialized_dimension(cd: CoxData, q_spec: Sequence, allow_non_fano: bool = False,
                          budget: Optional[int] = None) -> int:
    """Dimensión del cociente cuántico especializado en q_spec."""
    presentation = quantum_presentation(cd, check_q_spec(cd, q_spec), allow_non_fano)
    return quotient_dimension(quantum_groebner(presentation, budget))


def quantum_rank_check(cd: CoxData, trials: int, seed: int, allow_non_fano: bool = False,
                       budget: Optional[int] = None) -> RankCheckReport:
    """
    Comprueba que el cociente especializado tiene dimensión sum Betti.

    Args:
        cd: Datos de Cox
        trials: Número de especializaciones aleatorias
        seed: Semilla del generador
        allow_non_fano: Acepta abanicos no Fano (el reporte no lanza)
        budget: Tope de reducciones

    Returns:
        RankCheckReport con una entrada por especialización

    Raises:
        RankMismatch: Si alguna dimensión difiere (solo para abanicos Fano)
    """
    expected = sum(betti_numbers(cd, budget))
    rng = random.Random(seed)
    warnings = quantum_presentation(cd, None, allow_non_fano).warnings

    results = []
    for index in range(trials):
        q_spec = random_q_spec(cd.b_rank, rng)
        dimension = specialized_dimension(cd, q_spec, allow_non_fano, budget)
        results.append(RankTrial(index, q_spec, dimension, expected))
        log.debug(f"Prueba {index}: q={[str(c) for c in q_spec]} -> dim {dimension} (esperado {expected})")

    report = RankCheckReport(expected, tuple(results), cd.is_fano, warnings)
    failed = [trial for trial in results if not trial.ok]
    if failed and cd.is_fano:
        trial = failed[0]
        raise RankMismatch(
            f"Dimensión {trial.dimension} != {expected} para q = {[str(c) for c in trial.q_spec]}",
            details=report
        )
    log.info(f"Verificación de rango de {cd.fan.name}: {len(results)} pruebas, pasa={report.passed}")
    return report


__all__ = [
    'RankTrial',
    'RankCheckReport',
    'ProductEntry',
    'random_q_spec',
    'quantum_groebner',
    'quantum_standard_monomials',
    'quantum_product',
    'quantum_product_table',
    'classical_product',
    'specialized_dimension',
    'quantum_rank_check',
]
