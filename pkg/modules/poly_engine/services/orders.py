"""
toricarc - Órdenes Monomiales
=============================

MonomialOrder describe un orden (degrevlex, lex o graded-lex), una
permutación de variables y, opcionalmente, bloques de variables ordenados
por producto. Se traduce a un orden de sympy que PolyRing pueda usar.
"""

from dataclasses import dataclass
from typing import Tuple

from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex, grlex, lex

Monomial = Tuple[int, ...]

ORDER_KINDS = {
    "degrevlex": grevlex,
    "lex": lex,
    "graded-lex": grlex,
}


class PermutedBlockOrder(SympyMonomialOrder):
    """Orden de sympy: permutación de variables y orden producto por bloques.

    Cada bloque se compara con el orden base; el primer bloque domina.
    """

    is_global = True

    def __init__(self, kind: str, permutation: Tuple[int, ...], blocks: Tuple[int, ...]):
        self.kind = kind
        self.permutation = permutation
        self.blocks = blocks
        self.base = ORDER_KINDS[kind]
        self.alias = f"{kind}{list(permutation)}{list(blocks)}"

    def __call__(self, monomial: Monomial):
        permuted = tuple(monomial[i] for i in self.permutation)
        key = []
        start = 0
        for size in self.blocks:
            key.append(self.base(permuted[start:start + size]))
            start += size
        return tuple(key)

    def __repr__(self):
        return f"PermutedBlockOrder({self.kind!r}, {self.permutation}, {self.blocks})"

    def __eq__(self, other):
        return (
            isinstance(other, PermutedBlockOrder)
            and (self.kind, self.permutation, self.blocks) == (other.kind, other.permutation, other.blocks)
        )

    def __hash__(self):
        return hash((self.__class__.__name__, self.kind, self.permutation, self.blocks))


@dataclass(frozen=True)
class MonomialOrder:
    """Orden monomial.

    Attributes:
        kind: 'degrevlex', 'lex' o 'graded-lex'
        permutation: permutation[k] es la variable que ocupa la posición k
            (vacía = orden de entrada)
        blocks: Tamaños de bloques consecutivos (vacío = un solo bloque)
    """

    kind: str = "degrevlex"
    permutation: Tuple[int, ...] = ()
    blocks: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"Orden monomial desconocido: {self.kind} (use {', '.join(ORDER_KINDS)})")
        if self.permutation and sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError(f"Permutación inválida: {self.permutation}")

    def sympy_order(self, nvars: int) -> SympyMonomialOrder:
        """Orden de sympy para un anillo con nvars variables."""
        permutation = self.permutation or tuple(range(nvars))
        blocks = self.blocks or (nvars,)
        if len(permutation) != nvars or sum(blocks) != nvars:
            raise ValueError(f"El orden {self} no corresponde a {nvars} variables")

        if permutation == tuple(range(nvars)) and len(blocks) == 1:
            return ORDER_KINDS[self.kind]
        return PermutedBlockOrder(self.kind, permutation, blocks)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(sizes: Tuple[int, ...], kind: str = "degrevlex") -> MonomialOrder:
    """Orden producto con bloques consecutivos de los tamaños dados."""
    return MonomialOrder(kind, (), tuple(sizes))


__all__ = [
    'Monomial',
    'MonomialOrder',
    'PermutedBlockOrder',
    'DEGREVLEX',
    'LEX',
    'ORDER_KINDS',
    'block_order',
]
