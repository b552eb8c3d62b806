"""
toricarc - Series de Hilbert del Espacio de Arcos
=================================================

Comparación truncada de 1/(1-s)^r (la serie de Sym(B ⊗ Q)) con
E_{A_+}(s) * h(s) (la serie graduada de C[A_+] ⊗ H^*(X)), y los datos de
la localización que modela HF(Lambda X).
"""

from dataclasses import dataclass
from math import comb, gcd
from typing import Dict, Optional, Tuple

from core.utils.logger import get_logger
from modules.cohomology_rings.services.cox_data import CoxData
from modules.cohomology_rings.services.presentations import betti_numbers
from modules.cohomology_rings.services.quantum import specialized_dimension
from modules.fan_geometry.services.combinatorics import h_vector, primitive_relation
from modules.lattice_core.services.semigroup import semigroup_series

log = get_logger(__name__)


@dataclass(frozen=True)
class CousinSeriesReport:
    """Ambos lados de 1/(1-s)^r = E(s) h(s) mod s^{cutoff+1}.

    Attributes:
        holds: True si todos los coeficientes coinciden
        lhs: Coeficientes de 1/(1-s)^r
        rhs: Coeficientes de E(s) h(s)
        semigroup_series: Coeficientes de E(s)
        h_polynomial: h-vector del abanico
        first_mismatch: Primer grado donde difieren (None si holds)
        primitive_relations: Relación primitiva de cada colección
    """

    cutoff: int
    holds: bool
    lhs: Tuple[int, ...]
    rhs: Tuple[int, ...]
    semigroup_series: Tuple[int, ...]
    h_polynomial: Tuple[int, ...]
    first_mismatch: Optional[int]
    primitive_relations: Tuple[Tuple[Tuple[int, ...], Dict[int, int]], ...]


def _multiply_truncated(left: Tuple[int, ...], right: Tuple[int, ...], cutoff: int) -> Tuple[int, ...]:
    product = [0] * (cutoff + 1)
    for i, a in enumerate(left[:cutoff + 1]):
        for j, b in enumerate(right[:cutoff + 1 - i]):
            product[i + j] += a * b
    return tuple(product)


def cousin_series_check(cd: CoxData, cutoff: int) -> CousinSeriesReport:
    """
    Compara 1/(1-s)^r con E_{A_+}(s) h(s) hasta el grado cutoff.

    Un resultado holds=False es un hallazgo y no lanza excepción.

    Args:
        cd: Datos de Cox de un abanico liso y emparejado en facetas
        cutoff: Grado máximo

    Returns:
        CousinSeriesReport
    """
    r = cd.b_rank
    lhs = tuple(comb(k + r - 1, r - 1) if r else int(k == 0) for k in range(cutoff + 1))
    series = semigroup_series(cd.semigroup, cutoff)
    h = h_vector(cd.fan)
    rhs = _multiply_truncated(series, h, cutoff)

    mismatches = [k for k in range(cutoff + 1) if lhs[k] != rhs[k]]
    relations = tuple(
        (tuple(collection), primitive_relation(cd.fan, collection))
        for collection in cd.primitive_collections
    )
    report = CousinSeriesReport(
        cutoff=cutoff,
        holds=not mismatches,
        lhs=lhs,
        rhs=rhs,
        semigroup_series=series,
        h_polynomial=h,
        first_mismatch=mismatches[0] if mismatches else None,
        primitive_relations=relations,
    )
    log.info(
        f"Serie de Cousin de {cd.fan.name} hasta s^{cutoff}: "
        f"{'coincide' if report.holds else f'difiere en grado {report.first_mismatch}'}"
    )
    return report


@dataclass(frozen=True)
class FloerSeriesReport:
    """Datos de HF(Lambda X) como localización de C[A_+] ⊗ H^*(X).

    Attributes:
        rank: Rango de HF sobre el anillo de Laurent C[A] (= sum Betti)
        shifts: Desplazamiento 2 d(a_k) por elemento de la base de Hilbert
        period: 2 gcd{d(a_k)}, periodo de la graduación
        quantum_rank: Dimensión de la presentación cuántica en q = 1
        graded_ranks: dim HF^k para k = 0..2*cutoff (solo si r = 1)
    """

    rank: int
    shifts: Tuple[int, ...]
    period: int
    quantum_rank: int
    graded_ranks: Optional[Tuple[int, ...]]
    cutoff: int

    @property
    def matches_quantum(self) -> bool:
        return self.rank == self.quantum_rank


def floer_series(cd: CoxData, cutoff: int, allow_non_fano: bool = False,
                 budget: Optional[int] = None) -> FloerSeriesReport:
    """
    Rango y graduación de HF(Lambda X) = lim H^{*+2d(a)}(Lambda^a X).

    Args:
        cd: Datos de Cox (Fano, salvo allow_non_fano)
        cutoff: Se reportan los grados 0..2*cutoff cuando r = 1
        allow_non_fano: Acepta abanicos no Fano
        budget: Tope de reducciones

    Returns:
        FloerSeriesReport
    """
    betti = betti_numbers(cd, budget)
    degrees = [cd.degree(a) for a in cd.semigroup.hilbert_basis]
    shifts = tuple(2 * d for d in degrees)
    period = 2 * gcd(*degrees) if degrees else 0
    quantum_rank = specialized_dimension(cd, (1,) * cd.b_rank, allow_non_fano, budget)

    graded = None
    if cd.b_rank == 1 and period:
        # HF^k suma los b_{2i} con 2i congruente con k módulo el periodo
        graded = tuple(
            sum(b for i, b in enumerate(betti) if (2 * i - k) % period == 0)
            for k in range(2 * cutoff + 1)
        )

    report = FloerSeriesReport(sum(betti), shifts, period, quantum_rank, graded, cutoff)
    log.info(f"Serie de Floer de {cd.fan.name}: rango {report.rank}, desplazamientos {list(shifts)}")
    return report


__all__ = [
    'CousinSeriesReport',
    'FloerSeriesReport',
    'cousin_series_check',
    'floer_series',
]
