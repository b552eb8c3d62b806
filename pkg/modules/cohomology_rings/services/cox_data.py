"""
toricarc - Datos de Cox
=======================

Reúne los datos del cociente de Cox de un abanico liso: el retículo A
(núcleo de la matriz de rayos), beta: A -> Z^N, el semigrupo A_+ con su
base de Hilbert, las colecciones primitivas y las clases [Z_i] en B.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from core.exceptions import InvalidFan, NotInAPlus
from core.utils.logger import get_logger
from modules.fan_geometry.services.combinatorics import PrimitiveCollectionSet, primitive_collections
from modules.fan_geometry.services.fan import Fan
from modules.fan_geometry.services.validation import ValidationReport, validate_fan
from modules.lattice_core.services.hermite import IntVector, divisor_classes, kernel_basis
from modules.lattice_core.services.semigroup import LatticeMap, SemigroupAPlus, hilbert_basis

log = get_logger(__name__)


@dataclass(frozen=True)
class CoxData:
    """Datos del cociente X = (C^N - D) / S.

    Attributes:
        fan: Abanico
        a_rank: Rango de A
        b_rank: Rango r de B (= N - d = a_rank)
        beta: beta: A -> Z^N en la base a_1..a_r
        semigroup: A_+ con su base de Hilbert
        primitive_collections: Colecciones primitivas
        divisor_classes: Coordenadas de [Z_i] en la base de B dual a a_1..a_r
        a_basis: Vectores a_j en Z^N (la base elegida de A)
        validation: Reporte de validación del abanico
    """

    fan: Fan
    a_rank: int
    b_rank: int
    beta: LatticeMap
    semigroup: SemigroupAPlus
    primitive_collections: PrimitiveCollectionSet
    divisor_classes: Tuple[IntVector, ...]
    a_basis: Tuple[IntVector, ...]
    validation: ValidationReport

    @property
    def n_rays(self) -> int:
        return self.fan.n_rays

    @property
    def dim(self) -> int:
        return self.fan.dim

    @property
    def is_fano(self) -> bool:
        return self.validation.fano

    def beta_of(self, point: Sequence[int]) -> IntVector:
        return self.beta.apply(point)

    def degree(self, point: Sequence[int]) -> int:
        """d(a) = sum_i beta_i(a)."""
        return sum(self.beta.apply(point))

    def require_in_a_plus(self, point: Sequence[int]) -> IntVector:
        """Devuelve beta(a) o lanza NotInAPlus."""
        image = self.beta.apply(point)
        if any(value < 0 for value in image):
            raise NotInAPlus(f"a = {tuple(point)} no pertenece a A_+ (beta(a) = {image})")
        return image


def build_cox_data(fan: Fan) -> CoxData:
    """
    Construye los datos de Cox de un abanico.

    Args:
        fan: Abanico liso y emparejado en facetas

    Returns:
        CoxData con bases deterministas

    Raises:
        InvalidFan: Si el abanico no es liso o no está emparejado en facetas
        TorsionCokernel, NonPointed, HilbertBasisNotStable: propagados
    """
    report = validate_fan(fan)
    if not (report.smooth and report.facet_paired):
        raise InvalidFan(f"El abanico {fan.name} no es liso y emparejado en facetas: {report.details}")

    rays = fan.ray_matrix()
    rank_b, classes = divisor_classes(rays)
    basis = kernel_basis(rays)
    beta = LatticeMap.from_basis(basis, fan.n_rays)
    semigroup = hilbert_basis(beta)
    collections = primitive_collections(fan)

    cox = CoxData(
        fan=fan,
        a_rank=len(basis),
        b_rank=rank_b,
        beta=beta,
        semigroup=semigroup,
        primitive_collections=collections,
        divisor_classes=tuple(classes),
        a_basis=tuple(basis),
        validation=report,
    )
    log.info(
        f"Datos de Cox de {fan.name}: r={rank_b}, base de A={list(basis)}, "
        f"base de Hilbert={list(semigroup.hilbert_basis)}"
    )
    return cox


__all__ = ['CoxData', 'build_cox_data']
