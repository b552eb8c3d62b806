"""
toricarc - Combinatoria de Abanicos
===================================

Colecciones primitivas (no-caras minimales del complejo simplicial del
abanico), f-vector, h-vector y relaciones primitivas.
"""

import itertools
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, Sequence, Tuple

from sympy import Matrix

from core.exceptions import InvalidFan
from core.utils.logger import get_logger
from modules.fan_geometry.services.fan import Cone, Fan

log = get_logger(__name__)


@dataclass(frozen=True)
class PrimitiveCollectionSet:
    """Colecciones primitivas ordenadas por (tamaño, orden lexicográfico)."""

    collections: Tuple[Tuple[int, ...], ...]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.collections)

    def __len__(self) -> int:
        return len(self.collections)


def primitive_collections(fan: Fan) -> PrimitiveCollectionSet:
    """
    No-caras minimales del complejo {subconjuntos de conos maximales}.

    Recorre los tamaños en orden creciente. Una no-cara minimal tiene todas
    sus caras propias en el abanico, así que su tamaño es a lo sumo d+1.

    Args:
        fan: Abanico simplicial

    Returns:
        PrimitiveCollectionSet
    """
    found = []
    for size in range(1, min(fan.dim + 1, fan.n_rays) + 1):
        for subset in itertools.combinations(range(fan.n_rays), size):
            if fan.is_face(subset):
                continue
            if all(fan.is_face(face) for face in itertools.combinations(subset, size - 1)):
                found.append(subset)

    log.debug(f"Colecciones primitivas de {fan.name}: {found}")
    return PrimitiveCollectionSet(tuple(found))


def f_vector(fan: Fan) -> Tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d-1}); f_k cuenta los conos de dimensión k+1."""
    counts = [0] * (fan.dim + 1)
    for face in fan.faces:
        counts[len(face)] += 1
    return tuple(counts)


def h_vector(fan: Fan) -> Tuple[int, ...]:
    """
    h-vector (h_0, ..., h_d) de un abanico simplicial.

    h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
    """
    f = f_vector(fan)
    d = fan.dim
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def _containing_cone(fan: Fan, vector: Sequence[int]) -> Tuple[Cone, Tuple[int, ...]]:
    for cone in fan.max_cones:
        matrix = Matrix([list(fan.rays[i]) for i in cone]).T
        if matrix.det() == 0:
            continue
        coefficients = matrix.inv() * Matrix(list(vector))
        if all(c >= 0 for c in coefficients):
            if any(not c.is_integer for c in coefficients):
                raise InvalidFan(f"El cono {list(cone)} no es liso")
            return cone, tuple(int(c) for c in coefficients)
    raise InvalidFan(f"Ningún cono maximal contiene {tuple(vector)} (abanico no completo)")


def primitive_relation(fan: Fan, collection: Sequence[int]) -> Dict[int, int]:
    """
    Relación primitiva de una colección: sum_{i in I} v_i = sum_j c_j v_j.

    Los v_j son los rayos del cono que contiene la suma (solo coeficientes
    c_j > 0). Una suma nula da la relación vacía.

    Args:
        fan: Abanico liso y completo
        collection: Colección primitiva I

    Returns:
        Diccionario {índice de rayo: coeficiente}
    """
    total = [sum(fan.rays[i][k] for i in collection) for k in range(fan.dim)]
    if not any(total):
        return {}
    cone, coefficients = _containing_cone(fan, total)
    return {i: c for i, c in zip(cone, coefficients) if c}


def primitive_relation_degree(fan: Fan, collection: Sequence[int]) -> int:
    """|I| - sum c_j; todas positivas exactamente cuando el abanico es Fano."""
    return len(collection) - sum(primitive_relation(fan, collection).values())


__all__ = [
    'PrimitiveCollectionSet',
    'primitive_collections',
    'f_vector',
    'h_vector',
    'primitive_relation',
    'primitive_relation_degree',
]
