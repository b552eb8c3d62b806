"""
toricarc - Semigrupo A_+
========================

El homomorfismo beta: A -> Z^N, el semigrupo A_+ = beta^{-1}(Z^N_+),
su base de Hilbert y su serie generadora graduada por d(a) = sum_i beta_i(a).

La base de Hilbert se obtiene por enumeración exacta: se listan los puntos
con beta(a) en la caja [0, K]^N, se conservan los minimales en el orden por
componentes de beta(a) y K se duplica hasta que la lista no cambie entre
K y 2K.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, floor, ceiling

from config.settings import Settings
from core.exceptions import HilbertBasisNotStable, InputError, NonPointed
from core.utils.logger import get_logger
from modules.lattice_core.services.hermite import IntMatrix, IntVector

log = get_logger(__name__)


@dataclass(frozen=True)
class LatticeMap:
    """Homomorfismo de retículos Z^domain_rank -> Z^codomain_rank.

    La fila j de la matriz es la imagen del j-ésimo vector de la base.
    """

    domain_rank: int
    codomain_rank: int
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.nrows != self.domain_rank or self.matrix.ncols != self.codomain_rank:
            raise ValueError(
                f"Matriz {self.matrix.nrows}x{self.matrix.ncols} incompatible con "
                f"rangos {self.domain_rank} -> {self.codomain_rank}"
            )

    @classmethod
    def from_basis(cls, images: Sequence[Sequence[int]], codomain_rank: int) -> "LatticeMap":
        """Construye el mapa a partir de las imágenes de la base."""
        matrix = IntMatrix.from_rows(images, codomain_rank)
        return cls(matrix.nrows, codomain_rank, matrix)

    def apply(self, point: Sequence[int]) -> IntVector:
        if len(point) != self.domain_rank:
            raise InputError(f"El punto {tuple(point)} debe tener {self.domain_rank} coordenadas")
        return tuple(
            sum(coefficient * row[i] for coefficient, row in zip(point, self.matrix.entries))
            for i in range(self.codomain_rank)
        )

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.domain_rank


@dataclass(frozen=True)
class SemigroupAPlus:
    """El semigrupo A_+ con su base de Hilbert.

    Attributes:
        ambient_rank: Rango de A
        beta: Homomorfismo beta: A -> Z^N
        hilbert_basis: Generadores minimales, ordenados por (d(a), coordenadas descendentes)
        box: Caja [0, box]^N en la que se estabilizó la base
    """

    ambient_rank: int
    beta: LatticeMap
    hilbert_basis: Tuple[IntVector, ...]
    box: int = 0

    def degree(self, point: Sequence[int]) -> int:
        """d(a) = sum_i beta_i(a)."""
        return sum(self.beta.apply(point))

    def contains(self, point: Sequence[int]) -> bool:
        return a_plus_contains(self, point)


def a_plus_contains(semigroup: SemigroupAPlus, point: Sequence[int]) -> bool:
    """
    Pertenencia a A_+.

    Args:
        semigroup: Semigrupo A_+
        point: Punto de A en la base elegida

    Returns:
        True si beta(a) >= 0 componente a componente
    """
    return all(value >= 0 for value in semigroup.beta.apply(point))


def _pivot_inverse(beta: LatticeMap) -> Matrix:
    """Inversa racional de un menor k x k invertible de beta (columnas pivote)."""
    rank = beta.domain_rank
    columns: List[int] = []
    for i in range(beta.codomain_rank):
        trial = columns + [i]
        minor = Matrix([[beta.matrix.entries[j][c] for c in trial] for j in range(rank)])
        if minor.rank() == len(trial):
            columns = trial
        if len(columns) == rank:
            break

    minor = Matrix([[beta.matrix.entries[j][c] for c in columns] for j in range(rank)])
    return minor.inv()


def box_points(beta: LatticeMap, bound: int) -> List[IntVector]:
    """
    Todos los a con beta(a) en [0, bound]^N, incluido a = 0.

    Como a = y_P · P^{-1} para un menor invertible P, cada coordenada de a
    queda acotada en función de bound; se recorre esa caja y se filtra.

    Args:
        beta: Homomorfismo inyectivo
        bound: Cota K >= 0

    Returns:
        Lista ordenada de puntos
    """
    rank = beta.domain_rank
    if rank == 0:
        return [()]

    inverse = _pivot_inverse(beta)
    ranges = []
    for j in range(rank):
        low = sum(min(0, inverse[p, j]) for p in range(rank)) * bound
        high = sum(max(0, inverse[p, j]) for p in range(rank)) * bound
        ranges.append(range(int(floor(low)), int(ceiling(high)) + 1))

    points = []
    for point in itertools.product(*ranges):
        image = beta.apply(point)
        if all(0 <= value <= bound for value in image):
            points.append(point)
    return points


def _order_key(beta: LatticeMap, point: IntVector):
    return (sum(beta.apply(point)), tuple(-c for c in point))


def _irreducibles(beta: LatticeMap, bound: int) -> List[IntVector]:
    """Elementos de la caja que no son suma de dos elementos no nulos de A_+."""
    points = [p for p in box_points(beta, bound) if any(p)]
    images: Dict[IntVector, IntVector] = {p: beta.apply(p) for p in points}

    minimal = []
    for p in points:
        image = images[p]
        dominated = any(
            q != p and all(x <= y for x, y in zip(images[q], image))
            for q in points
        )
        if not dominated:
            minimal.append(p)
    return sorted(minimal, key=lambda p: _order_key(beta, p))


def hilbert_basis(beta: LatticeMap, max_box: Optional[int] = None) -> SemigroupAPlus:
    """
    Base de Hilbert de A_+ = {a : beta(a) >= 0}.

    Args:
        beta: Homomorfismo beta: A -> Z^N
        max_box: Cota máxima de la caja (por defecto Settings.HILBERT_MAX_BOX)

    Returns:
        SemigroupAPlus con la base de Hilbert

    Raises:
        NonPointed: Si beta no es inyectiva (existe a != 0 con beta(a) = 0)
        HilbertBasisNotStable: Si la base no se estabiliza antes de max_box
    """
    max_box = Settings.HILBERT_MAX_BOX if max_box is None else max_box

    if not beta.is_injective():
        raise NonPointed("beta no es inyectiva: A_+ contiene a y -a con a != 0")

    if beta.domain_rank == 0:
        return SemigroupAPlus(0, beta, (), 0)

    bound = 1
    current = _irreducibles(beta, bound)
    while True:
        doubled = _irreducibles(beta, 2 * bound)
        log.debug(f"Base de Hilbert: caja {bound} -> {len(current)} elementos, caja {2 * bound} -> {len(doubled)}")
        if doubled == current:
            break
        bound *= 2
        if bound > max_box:
            raise HilbertBasisNotStable(
                f"La base de Hilbert no se estabilizó con caja <= {max_box}",
                details=doubled
            )
        current = doubled

    log.debug(f"Base de Hilbert estable en caja {bound}: {current}")
    return SemigroupAPlus(beta.domain_rank, beta, tuple(current), bound)


def semigroup_series(semigroup: SemigroupAPlus, cutoff: int) -> Tuple[int, ...]:
    """
    Serie E(s) = sum_{a in A_+} s^{d(a)} truncada módulo s^{cutoff+1}.

    Si d(a) <= cutoff entonces cada beta_i(a) <= cutoff, así que basta
    enumerar la caja [0, cutoff]^N.

    Args:
        semigroup: Semigrupo A_+ (puntiagudo)
        cutoff: Grado máximo

    Returns:
        Coeficientes (c_0, ..., c_cutoff)
    """
    coefficients = [0] * (cutoff + 1)
    for point in box_points(semigroup.beta, cutoff):
        degree = semigroup.degree(point)
        if degree <= cutoff:
            coefficients[degree] += 1
    return tuple(coefficients)


__all__ = [
    'LatticeMap',
    'SemigroupAPlus',
    'a_plus_contains',
    'box_points',
    'hilbert_basis',
    'semigroup_series',
]
