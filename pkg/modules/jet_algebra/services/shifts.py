"""
toricarc - Desplazamientos de Jets
==================================

Para a en A_+, la auto-inmersión gamma(t) -> t^{beta(a)} gamma(t) actúa
sobre las coordenadas de jets como z_{i,n} -> z_{i,n-beta_i(a)} (cero si
el índice queda negativo). Su imagen es el lugar z_{i,n} = 0 con
n < beta_i(a).

También genera los ideales truncados del lugar excepcional: para cada
colección primitiva I, (z_{i,n} : i en I, 0 <= n <= m).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from core.exceptions import InputError
from core.utils.logger import get_logger
from modules.cohomology_rings.services.cox_data import CoxData
from modules.jet_algebra.services.jets import jet_name, jet_ring
from modules.lattice_core.services.hermite import IntVector
from modules.poly_engine.services.polynomials import Poly, substitute

log = get_logger(__name__)

JetIndex = Tuple[int, int]


def coordinate_names(cd: CoxData) -> List[str]:
    return [f"z{i + 1}" for i in range(cd.n_rays)]


def cox_jet_ring(cd: CoxData, m: int) -> PolyRing:
    """Anillo de jets Q[z{i}_{n}] de C^N truncado en orden m."""
    return jet_ring(coordinate_names(cd), m)


@dataclass(frozen=True)
class ShiftMap:
    """Endomorfismo epsilon_a sobre jets de orden m.

    Attributes:
        a: Punto de A_+
        order: Orden de truncación m
        shifts: beta(a), el desplazamiento de cada coordenada
    """

    a: IntVector
    order: int
    shifts: IntVector

    @property
    def n_coords(self) -> int:
        return len(self.shifts)

    def target(self, i: int, n: int) -> Optional[JetIndex]:
        """Imagen de z_{i,n} por la sustitución (None = cero)."""
        shifted = n - self.shifts[i]
        return (i, shifted) if shifted >= 0 else None

    @property
    def substitution(self) -> Tuple[Tuple[JetIndex, Optional[JetIndex]], ...]:
        return tuple(
            ((i, n), self.target(i, n))
            for i in range(self.n_coords)
            for n in range(self.order + 1)
        )

    def is_identity(self) -> bool:
        return not any(self.shifts)

    def compose(self, other: "ShiftMap") -> "ShiftMap":
        """epsilon_a o epsilon_b = epsilon_{a+b}."""
        if other.order != self.order or other.n_coords != self.n_coords:
            raise InputError("Solo se componen desplazamientos del mismo orden y rango")
        return ShiftMap(
            tuple(x + y for x, y in zip(self.a, other.a)),
            self.order,
            tuple(x + y for x, y in zip(self.shifts, other.shifts)),
        )

    def apply(self, poly: Poly) -> Poly:
        """Pullback de un polinomio en las variables de jets."""
        ring = poly.ring
        images = []
        for i in range(self.n_coords):
            for n in range(self.order + 1):
                target = self.target(i, n)
                images.append(ring.zero if target is None else ring.gens[target[0] * (self.order + 1) + target[1]])
        return substitute(poly, images, ring)

    def image_generators(self) -> List[JetIndex]:
        """Coordenadas que se anulan en la imagen: n < beta_i(a), n <= m."""
        return [
            (i, n)
            for i in range(self.n_coords)
            for n in range(min(self.shifts[i], self.order + 1))
        ]

    def image_codim(self) -> int:
        return len(self.image_generators())


def epsilon_shift(cd: CoxData, a: Sequence[int], m: int) -> ShiftMap:
    """
    Desplazamiento epsilon_a sobre jets de orden m.

    Args:
        cd: Datos de Cox
        a: Punto de A_+
        m: Orden de truncación

    Returns:
        ShiftMap

    Raises:
        NotInAPlus: Si a no está en A_+
    """
    if m < 0:
        raise InputError(f"El orden de truncación debe ser >= 0 (recibido {m})")
    shifts = cd.require_in_a_plus(a)
    if m < max(shifts, default=0):
        log.warning(
            f"Orden m={m} menor que max beta_i(a)={max(shifts)}: la truncación pierde información"
        )
    return ShiftMap(tuple(a), m, shifts)


@dataclass(frozen=True)
class JetLocus:
    """Ideal (z_{i,n} : i en I, n <= m) de una colección primitiva."""

    collection: Tuple[int, ...]
    order: int
    generators: Tuple[str, ...]

    @property
    def codim(self) -> int:
        return len(self.generators)


def exceptional_jet_locus(cd: CoxData, m: int) -> List[JetLocus]:
    """
    Componentes truncadas del lugar excepcional de jets.

    Args:
        cd: Datos de Cox
        m: Orden de truncación

    Returns:
        Un JetLocus por colección primitiva, de codimensión |I|(m+1)
    """
    if m < 0:
        raise InputError(f"El orden de truncación debe ser >= 0 (recibido {m})")
    names = coordinate_names(cd)
    return [
        JetLocus(
            tuple(collection),
            m,
            tuple(jet_name(names[i], n) for i in collection for n in range(m + 1)),
        )
        for collection in cd.primitive_collections
    ]


__all__ = [
    'ShiftMap',
    'JetLocus',
    'coordinate_names',
    'cox_jet_ring',
    'epsilon_shift',
    'exceptional_jet_locus',
]
