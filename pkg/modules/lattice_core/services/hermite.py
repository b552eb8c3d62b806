"""
toricarc - Álgebra Lineal Entera
================================

Matrices enteras exactas, forma normal de Hermite con matriz de
transformación, núcleos enteros y clases de divisores.

Convención de filas: la fila i de una matriz es la imagen del i-ésimo
vector de la base. Así la matriz de rayos (N x d) manda e_i al rayo v_i
y su núcleo (por la izquierda) es el retículo A de relaciones lineales
entre los rayos.

Examples:
    Núcleo de la matriz de rayos de P^2::

        rays = IntMatrix.from_rows([(1, 0), (0, 1), (-1, -1)])
        kernel_basis(rays)          # [(1, 1, 1)]

    Clases de divisores::

        divisor_classes(rays)       # (1, [(1,), (1,), (1,)])
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from core.exceptions import InvariantError, TorsionCokernel
from core.utils.logger import get_logger

log = get_logger(__name__)

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Matriz entera rectangular e inmutable.

    Attributes:
        entries: Filas de la matriz (tuplas de enteros de precisión arbitraria)
        ncols: Número de columnas (explícito para admitir matrices sin filas)
    """

    entries: Tuple[IntVector, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        """Construye la matriz validando que sea rectangular y entera."""
        converted = []
        for row in rows:
            values = []
            for value in row:
                if isinstance(value, float) or int(value) != value:
                    raise ValueError(f"Entrada no entera: {value!r}")
                values.append(int(value))
            converted.append(tuple(values))

        if ncols is None:
            ncols = len(converted[0]) if converted else 0
        if any(len(row) != ncols for row in converted):
            raise ValueError("La matriz no es rectangular")
        return cls(tuple(converted), ncols)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)), size)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> IntVector:
        return self.entries[i]

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"Dimensiones incompatibles: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        columns = [other.column(j) for j in range(other.ncols)]
        product = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in columns)
            for row in self.entries
        )
        return IntMatrix(product, other.ncols)

    def to_sympy(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, [value for row in self.entries for value in row])

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return self.to_sympy().rank()


def _swap(rows: List[List[int]], i: int, j: int):
    if i != j:
        rows[i], rows[j] = rows[j], rows[i]


def _add_multiple(rows: List[List[int]], target: int, source: int, factor: int):
    if factor:
        rows[target] = [a + factor * b for a, b in zip(rows[target], rows[source])]


def hermite_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Forma normal de Hermite por filas, con la transformación unimodular.

    Pivotes positivos, filas nulas al final y entradas sobre cada pivote
    reducidas al intervalo [0, pivote). Regla de pivote determinista: la
    fila con menor valor absoluto en la columna (a igualdad, menor índice).

    Args:
        matrix: Matriz entera M (m x n)

    Returns:
        Tupla (H, U) con H = U·M y |det U| = 1
    """
    rows = [list(row) for row in matrix.entries]
    m, n = matrix.nrows, matrix.ncols
    unimodular = [[int(i == j) for j in range(m)] for i in range(m)]

    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break

        # Euclides sobre la columna hasta dejar un único valor no nulo
        while True:
            candidates = [i for i in range(pivot_row, m) if rows[i][col] != 0]
            if not candidates:
                break
            best = min(candidates, key=lambda i: (abs(rows[i][col]), i))
            _swap(rows, pivot_row, best)
            _swap(unimodular, pivot_row, best)

            pivot = rows[pivot_row][col]
            cleared = True
            for i in range(pivot_row + 1, m):
                if rows[i][col]:
                    factor = rows[i][col] // pivot
                    _add_multiple(rows, i, pivot_row, -factor)
                    _add_multiple(unimodular, i, pivot_row, -factor)
                    if rows[i][col]:
                        cleared = False
            if cleared:
                break

        if rows[pivot_row][col] == 0:
            continue

        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
            unimodular[pivot_row] = [-a for a in unimodular[pivot_row]]

        pivot = rows[pivot_row][col]
        for i in range(pivot_row):
            factor = rows[i][col] // pivot
            _add_multiple(rows, i, pivot_row, -factor)
            _add_multiple(unimodular, i, pivot_row, -factor)

        pivot_row += 1

    return IntMatrix.from_rows(rows, n), IntMatrix.from_rows(unimodular, m)


def canonical_lattice_basis(vectors: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    Base canónica del retículo generado por vectores enteros.

    Es la forma de Hermite respecto a las coordenadas invertidas: cada
    vector tiene su última entrada no nula (pivote) positiva, los pivotes
    aparecen en posiciones crecientes y las demás entradas en la columna
    de un pivote quedan en [0, pivote).

    Args:
        vectors: Generadores del retículo

    Returns:
        Lista de vectores de la base (vacía si el retículo es nulo)
    """
    if not vectors:
        return []

    flipped = IntMatrix.from_rows([tuple(reversed(v)) for v in vectors])
    hnf, _ = hermite_normal_form(flipped)
    nonzero = [row for row in hnf.entries if any(row)]
    return [tuple(reversed(row)) for row in reversed(nonzero)]


def kernel_basis(matrix: IntMatrix) -> List[IntVector]:
    """
    Base del núcleo entero {v : v·M = 0} (convención de filas).

    El núcleo obtenido de las filas de U correspondientes a filas nulas de
    la forma de Hermite es saturado; luego se normaliza con
    canonical_lattice_basis para que la base sea reproducible.

    Args:
        matrix: Matriz entera M (m x n)

    Returns:
        Lista de vectores de longitud m
    """
    hnf, unimodular = hermite_normal_form(matrix)
    rank = sum(1 for row in hnf.entries if any(row))
    kernel = [unimodular.row(i) for i in range(rank, matrix.nrows)]
    basis = canonical_lattice_basis(kernel)
    log.debug(f"Núcleo de matriz {matrix.nrows}x{matrix.ncols}: rango {rank}, base {basis}")
    return basis


def divisor_classes(ray_matrix: IntMatrix) -> Tuple[int, List[IntVector]]:
    """
    Clases [Z_i] en B = Z^N / M.

    Las coordenadas se toman en la base de B dual a la base de A dada por
    kernel_basis, de modo que la coordenada j de [Z_i] es beta_i(a_j).

    Args:
        ray_matrix: Matriz de rayos (N x d), fila i = rayo v_i

    Returns:
        Tupla (rango_B, clases) con rango_B = N - d

    Raises:
        InvariantError: Si los rayos no generan el espacio sobre Q
        TorsionCokernel: Si B tiene torsión
    """
    n_rays, dim = ray_matrix.nrows, ray_matrix.ncols
    if ray_matrix.rank() < dim:
        raise InvariantError(f"Los rayos no generan Q^{dim}")

    factors = invariant_factors(ray_matrix.to_sympy(), domain=ZZ)
    torsion = [abs(int(f)) for f in factors if abs(int(f)) > 1]
    if torsion:
        raise TorsionCokernel(
            f"El cokernel Z^{n_rays}/M tiene torsión {torsion} (abanico no liso)",
            details=torsion
        )

    basis = kernel_basis(ray_matrix)
    classes = [tuple(vector[i] for vector in basis) for i in range(n_rays)]
    return len(basis), classes


__all__ = [
    'IntMatrix',
    'IntVector',
    'hermite_normal_form',
    'canonical_lattice_basis',
    'kernel_basis',
    'divisor_classes',
]
