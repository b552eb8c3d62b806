"""
toricarc - Validación de Abanicos
=================================

Comprueba las hipótesis que usan los demás módulos: simplicial, liso,
emparejado en facetas, rayos que generan positivamente y Fano.

La completitud no se decide de forma exacta: facet_paired junto con
rays_positively_span es la condición necesaria implementada y los
reportes la llaman "pseudo-completo".
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

from sympy import Matrix, Rational

from core.utils.logger import get_logger
from modules.fan_geometry.services.fan import Cone, Fan

log = get_logger(__name__)


@dataclass(frozen=True)
class ValidationReport:
    """Resultado de validate_fan. fano implica smooth y facet_paired."""

    simplicial: bool
    smooth: bool
    facet_paired: bool
    rays_positively_span: bool
    fano: bool
    details: str

    @property
    def pseudo_complete(self) -> bool:
        return self.facet_paired and self.rays_positively_span

    def to_dict(self) -> Dict[str, object]:
        return {
            "simplicial": self.simplicial,
            "smooth": self.smooth,
            "facet_paired": self.facet_paired,
            "rays_positively_span": self.rays_positively_span,
            "pseudo_complete": self.pseudo_complete,
            "fano": self.fano,
            "details": self.details,
        }


def cone_matrix(fan: Fan, cone: Cone) -> Matrix:
    return Matrix([list(fan.rays[i]) for i in cone])


def cone_dual_vector(fan: Fan, cone: Cone) -> Optional[Matrix]:
    """m_sigma con <m_sigma, v_i> = 1 para cada rayo del cono (None si es singular)."""
    matrix = cone_matrix(fan, cone)
    if matrix.det() == 0:
        return None
    return matrix.inv() * Matrix([1] * fan.dim)


def _positively_spanning(fan: Fan) -> bool:
    """0 está en el interior de la envolvente convexa de los rayos.

    Equivale a que no exista m != 0 con <m, v_i> >= 0 para todo i. Si tal m
    existe, el cono que forman tiene un rayo extremo determinado por d-1
    restricciones activas linealmente independientes.
    """
    rays = Matrix([list(ray) for ray in fan.rays])
    if rays.rank() < fan.dim:
        return False

    def nonnegative(m: Matrix) -> bool:
        return all((rays.row(i) * m)[0] >= 0 for i in range(rays.rows))

    if fan.dim == 1:
        candidates = [Matrix([1]), Matrix([-1])]
        return not any(nonnegative(m) for m in candidates)

    for subset in itertools.combinations(range(fan.n_rays), fan.dim - 1):
        tight = Matrix([list(fan.rays[i]) for i in subset])
        if tight.rank() != fan.dim - 1:
            continue
        m = tight.nullspace()[0]
        if nonnegative(m) or nonnegative(-m):
            return False
    return True


def validate_fan(fan: Fan) -> ValidationReport:
    """
    Valida un abanico estructuralmente correcto.

    Args:
        fan: Abanico

    Returns:
        ValidationReport; los fallos se describen en details (nunca lanza)
    """
    problems: List[str] = []

    determinants = {cone: cone_matrix(fan, cone).det() for cone in fan.max_cones}
    singular = [cone for cone, det in determinants.items() if det == 0]
    simplicial = not singular
    if singular:
        problems.append(f"conos degenerados: {[list(c) for c in singular]}")

    non_smooth = [cone for cone, det in determinants.items() if abs(det) != 1]
    smooth = not non_smooth
    if non_smooth and simplicial:
        problems.append(f"conos no lisos: {[list(c) for c in non_smooth]}")

    facets = Counter(
        facet
        for cone in fan.max_cones
        for facet in itertools.combinations(cone, fan.dim - 1)
    )
    unpaired = sorted(facet for facet, count in facets.items() if count != 2)
    facet_paired = not unpaired
    if unpaired:
        problems.append(f"facetas no emparejadas: {[list(f) for f in unpaired]}")

    positively_spanning = _positively_spanning(fan)
    if not positively_spanning:
        problems.append("los rayos no generan positivamente N_R")

    convex = simplicial
    if simplicial:
        for cone in fan.max_cones:
            m = cone_dual_vector(fan, cone)
            outside = [j for j in range(fan.n_rays) if j not in cone]
            violating = [
                j for j in outside
                if sum(Rational(c) * m[k] for k, c in enumerate(fan.rays[j])) >= 1
            ]
            if violating:
                convex = False
                problems.append(
                    f"no Fano: cono {list(cone)} con m={tuple(m)} y rayos {violating} con <m,v> >= 1"
                )
                break

    fano = convex and smooth and facet_paired and positively_spanning
    report = ValidationReport(
        simplicial=simplicial,
        smooth=smooth,
        facet_paired=facet_paired,
        rays_positively_span=positively_spanning,
        fano=fano,
        details="; ".join(problems) if problems else "ok",
    )
    log.info(f"Validación de {fan.name}: liso={smooth}, emparejado={facet_paired}, fano={fano}")
    return report


__all__ = [
    'ValidationReport',
    'validate_fan',
    'cone_matrix',
    'cone_dual_vector',
]
