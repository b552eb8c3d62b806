"""
toricarc - Lattice Core Module
==============================

Álgebra lineal entera exacta: forma normal de Hermite, núcleos enteros,
clases de divisores en B = Z^N / M, el semigrupo A_+ = beta^{-1}(Z^N_+),
su base de Hilbert y su serie generadora.

Submodules:
    - services.hermite: IntMatrix, forma de Hermite, núcleos y clases
    - services.semigroup: LatticeMap, SemigroupAPlus, base de Hilbert

Example:
    Semigrupo de P^2::

        from modules.lattice_core.services.semigroup import LatticeMap, hilbert_basis

        beta = LatticeMap.from_basis([(1, 1, 1)], 3)
        semigroup = hilbert_basis(beta)
        semigroup.hilbert_basis     # ((1,),)

Version:
    1.0.0
"""

from modules.lattice_core.services.hermite import (
    IntMatrix, divisor_classes, hermite_normal_form, kernel_basis,
)
from modules.lattice_core.services.semigroup import (
    LatticeMap, SemigroupAPlus, hilbert_basis, semigroup_series,
)

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "IntMatrix",
    "LatticeMap",
    "SemigroupAPlus",
    "hermite_normal_form",
    "kernel_basis",
    "divisor_classes",
    "hilbert_basis",
    "semigroup_series",
]
