"""
toricarc - Abanicos
===================

El tipo Fan, su formato de archivo (JSON UTF-8) y una pequeña biblioteca
de abanicos estándar.

Formato::

    {
      "name": "P2",
      "dim": 2,
      "rays": [[1, 0], [0, 1], [-1, -1]],
      "max_cones": [[0, 1], [1, 2], [0, 2]]
    }

El orden de los rayos se conserva siempre: fija las variables x1..xN.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Any, FrozenSet, List, Sequence, Set, Tuple

from core.exceptions import InvariantError, ParseError
from core.utils.file_handler import dump_json, load_json_text, read_text_file
from core.utils.logger import get_logger
from modules.lattice_core.services.hermite import IntMatrix, IntVector

log = get_logger(__name__)

Cone = Tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """Abanico simplicial dado por rayos y conos maximales.

    Attributes:
        name: Nombre del abanico
        dim: Dimensión d del retículo N
        rays: Rayos primitivos v_1..v_N
        max_cones: Conos maximales como tuplas ordenadas de índices (base 0)
    """

    name: str
    dim: int
    rays: Tuple[IntVector, ...]
    max_cones: Tuple[Cone, ...]

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """Matriz N x d cuya fila i es el rayo v_i."""
        return IntMatrix.from_rows(self.rays, self.dim)

    @cached_property
    def faces(self) -> Set[FrozenSet[int]]:
        """Todos los conos del abanico (subconjuntos de conos maximales), incluido el vacío."""
        result: Set[FrozenSet[int]] = set()
        for cone in self.max_cones:
            for size in range(len(cone) + 1):
                result.update(frozenset(c) for c in itertools.combinations(cone, size))
        return result

    def is_face(self, indices: Sequence[int]) -> bool:
        return frozenset(indices) in self.faces


def _expect(condition: bool, message: str):
    if not condition:
        raise ParseError(message)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_fan(text: str, source: str = "<texto>") -> Fan:
    """
    Interpreta un archivo de abanico.

    Args:
        text: Contenido JSON del archivo
        source: Nombre del origen para los mensajes de error

    Returns:
        Fan con los invariantes estructurales verificados

    Raises:
        ParseError: Si la sintaxis o los tipos son incorrectos
        InvariantError: Rayo no primitivo o repetido, índice fuera de rango,
            cono de tamaño distinto de d
    """
    data = load_json_text(text, source)
    _expect(isinstance(data, dict), f"{source}: se esperaba un objeto JSON")
    for key in ("name", "dim", "rays", "max_cones"):
        _expect(key in data, f"{source}: falta el campo '{key}'")

    name, dim, rays, cones = data["name"], data["dim"], data["rays"], data["max_cones"]
    _expect(isinstance(name, str), f"{source}: 'name' debe ser texto")
    _expect(_is_int(dim) and dim >= 1, f"{source}: 'dim' debe ser un entero positivo")
    _expect(isinstance(rays, list) and rays, f"{source}: 'rays' debe ser una lista no vacía")
    _expect(isinstance(cones, list) and cones, f"{source}: 'max_cones' debe ser una lista no vacía")

    parsed_rays: List[IntVector] = []
    for i, ray in enumerate(rays):
        _expect(isinstance(ray, list) and all(_is_int(c) for c in ray),
                f"{source}: el rayo {i} debe ser una lista de enteros")
        if len(ray) != dim:
            raise InvariantError(f"{source}: el rayo {i} tiene {len(ray)} coordenadas, se esperaban {dim}")
        if gcd(*ray) != 1:
            raise InvariantError(f"{source}: el rayo {i} = {tuple(ray)} no es primitivo")
        parsed_rays.append(tuple(ray))

    if len(set(parsed_rays)) != len(parsed_rays):
        raise InvariantError(f"{source}: hay rayos repetidos")

    parsed_cones: List[Cone] = []
    for k, cone in enumerate(cones):
        _expect(isinstance(cone, list) and all(_is_int(c) for c in cone),
                f"{source}: el cono {k} debe ser una lista de índices")
        if any(not 0 <= c < len(parsed_rays) for c in cone):
            raise InvariantError(f"{source}: el cono {k} tiene índices fuera de rango")
        if len(set(cone)) != len(cone):
            raise InvariantError(f"{source}: el cono {k} repite índices")
        if len(cone) != dim:
            raise InvariantError(f"{source}: el cono {k} tiene {len(cone)} rayos, se esperaban {dim}")
        parsed_cones.append(tuple(sorted(cone)))

    if len(set(parsed_cones)) != len(parsed_cones):
        raise InvariantError(f"{source}: hay conos maximales repetidos")

    fan = Fan(name, dim, tuple(parsed_rays), tuple(parsed_cones))
    log.debug(f"Abanico {name}: d={dim}, N={fan.n_rays}, {len(parsed_cones)} conos maximales")
    return fan


def serialize_fan(fan: Fan) -> str:
    """Texto JSON del abanico; parse_fan(serialize_fan(f)) == f."""
    return dump_json({
        "name": fan.name,
        "dim": fan.dim,
        "rays": [list(ray) for ray in fan.rays],
        "max_cones": [list(cone) for cone in fan.max_cones],
    })


def load_fan(path: str | Path) -> Fan:
    """Lee y valida estructuralmente un archivo de abanico."""
    return parse_fan(read_text_file(path), source=str(path))


# ===================================
# Biblioteca de abanicos
# ===================================

def projective_space(n: int) -> Fan:
    """Abanico de P^n: rayos e_1..e_n y -(e_1+...+e_n)."""
    if n < 1:
        raise InvariantError("La dimensión de P^n debe ser al menos 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = tuple(itertools.combinations(range(n + 1), n))
    return Fan(f"P{n}", n, tuple(rays), cones)


def hirzebruch(k: int) -> Fan:
    """Superficie de Hirzebruch F_k: rayos (1,0), (0,1), (-1,k), (0,-1)."""
    rays = ((1, 0), (0, 1), (-1, k), (0, -1))
    cones = ((0, 1), (1, 2), (2, 3), (0, 3))
    return Fan(f"F{k}", 2, rays, cones)


def product_fan(first: Fan, second: Fan) -> Fan:
    """Abanico producto: rayos (v, 0) seguidos de (0, w), conos sigma x tau."""
    dim = first.dim + second.dim
    rays = [ray + (0,) * second.dim for ray in first.rays]
    rays += [(0,) * first.dim + ray for ray in second.rays]
    offset = first.n_rays
    cones = tuple(
        sigma + tuple(i + offset for i in tau)
        for sigma in first.max_cones
        for tau in second.max_cones
    )
    return Fan(f"{first.name}x{second.name}", dim, tuple(rays), cones)


__all__ = [
    'Fan',
    'parse_fan',
    'serialize_fan',
    'load_fan',
    'projective_space',
    'hirzebruch',
    'product_fan',
]
