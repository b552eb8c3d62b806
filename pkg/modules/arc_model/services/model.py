"""
toricarc - Modelo de la Cohomología del Espacio de Arcos
========================================================

H^*(Lambda^0 X) se modela como Sym(B ⊗ Q) = Q[y1..yr] con y_j de grado 1
(grado cohomológico 2). La clase z_i = [Z_i] es la forma lineal
sum_j beta_i(a_j) y_j y el elemento q^a de C[A_+] actúa multiplicando por
mu(a) = prod_i z_i^{beta_i(a)}.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from core.exceptions import InputError, NotInAPlus, NotNested
from core.utils.logger import get_logger
from modules.cohomology_rings.services.cox_data import CoxData
from modules.cohomology_rings.services.presentations import betti_numbers
from modules.lattice_core.services.hermite import IntVector
from modules.poly_engine.services.orders import DEGREVLEX
from modules.poly_engine.services.polynomials import Poly, make_ring

log = get_logger(__name__)


@dataclass(frozen=True)
class ArcCohomologyModel:
    """Sym(H^2(X)) con la estructura de C[A_+]-módulo.

    Attributes:
        r: Rango de B
        ring: Q[y1..yr] en degrevlex
        z_classes: Las N formas lineales z_i
        cox: Datos de Cox de los que proviene
    """

    r: int
    ring: PolyRing
    z_classes: Tuple[Poly, ...]
    cox: CoxData

    def mu(self, point: Sequence[int]) -> Poly:
        """mu(a) = prod_i z_i^{beta_i(a)}; requiere a en A_+."""
        image = self.cox.require_in_a_plus(point)
        result = self.ring.one
        for z, exponent in zip(self.z_classes, image):
            if exponent:
                result = result * z ** exponent
        return result

    def degree(self, point: Sequence[int]) -> int:
        return self.cox.degree(point)


def y_names(rank: int) -> List[str]:
    return [f"y{j + 1}" for j in range(rank)]


def build_arc_model(cd: CoxData) -> ArcCohomologyModel:
    """
    Construye el modelo Sym(B ⊗ Q) a partir de beta.

    La coordenada j de [Z_i] es beta_i(a_j), es decir la entrada (j, i) de
    la matriz de beta.

    Args:
        cd: Datos de Cox

    Returns:
        ArcCohomologyModel
    """
    ring = make_ring(y_names(cd.b_rank), DEGREVLEX)
    z_classes = []
    for i in range(cd.n_rays):
        form = ring.zero
        for j in range(cd.a_rank):
            coefficient = cd.beta.matrix.entries[j][i]
            if coefficient:
                form += ring.gens[j] * coefficient
        z_classes.append(form)
    log.debug(f"Modelo de arcos de {cd.fan.name}: r={cd.b_rank}")
    return ArcCohomologyModel(cd.b_rank, ring, tuple(z_classes), cd)


def q_action(model: ArcCohomologyModel, point: Sequence[int], alpha: Poly) -> Poly:
    """
    Acción de q^a sobre alpha: E_{a!}(alpha) = mu(a) * alpha.

    Args:
        model: Modelo de arcos
        point: a en A_+
        alpha: Clase en Q[y]

    Returns:
        mu(a) * alpha, de grado deg(alpha) + d(a)

    Raises:
        NotInAPlus: Si a no está en A_+
    """
    if alpha.ring != model.ring:
        raise InputError("La clase alpha no pertenece al anillo del modelo")
    return model.mu(point) * alpha


def self_embedding_codim(cd: CoxData, a: Sequence[int], b: Sequence[int]) -> int:
    """
    Codimensión de Lambda^b X en Lambda^a X: sum_i beta_i(b - a).

    Raises:
        NotNested: Si b - a no está en A_+
    """
    if len(a) != cd.a_rank or len(b) != cd.a_rank:
        raise InputError(f"Los puntos deben tener {cd.a_rank} coordenadas")
    difference = tuple(y - x for x, y in zip(a, b))
    image = cd.beta_of(difference)
    if any(value < 0 for value in image):
        raise NotNested(f"b - a = {difference} no está en A_+: los espacios no están anidados")
    return sum(image)


@dataclass(frozen=True)
class StratumDescriptor:
    """Estrato Lambda^{=a} X: fibrado sobre X, de codimensión d(a)."""

    a: IntVector
    codim: int
    poincare: Tuple[int, ...]

    def poincare_text(self, variable: str = "s") -> str:
        terms = []
        for k, coefficient in enumerate(self.poincare):
            if not coefficient:
                continue
            power = "" if k == 0 else (variable if k == 1 else f"{variable}^{k}")
            if not power:
                terms.append(str(coefficient))
            elif coefficient == 1:
                terms.append(power)
            else:
                terms.append(f"{coefficient}*{power}")
        return " + ".join(terms) if terms else "0"


def stratum_descriptor(cd: CoxData, point: Sequence[int],
                       betti: Optional[Sequence[int]] = None) -> StratumDescriptor:
    """
    Descriptor del estrato Lambda^{=a} X.

    Args:
        cd: Datos de Cox
        point: a en A_+
        betti: Números de Betti de X (se calculan si no se dan)

    Returns:
        StratumDescriptor con codim = d(a) y el polinomio de Poincaré de X
    """
    if len(point) != cd.a_rank:
        raise InputError(f"El punto debe tener {cd.a_rank} coordenadas")
    image = cd.beta_of(point)
    if any(value < 0 for value in image):
        raise NotInAPlus(f"a = {tuple(point)} no pertenece a A_+")
    betti = tuple(betti) if betti is not None else betti_numbers(cd)
    return StratumDescriptor(tuple(point), sum(image), betti)


__all__ = [
    'ArcCohomologyModel',
    'StratumDescriptor',
    'y_names',
    'build_arc_model',
    'q_action',
    'self_embedding_codim',
    'stratum_descriptor',
]
