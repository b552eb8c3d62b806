"""
toricarc - Cohomology Rings Module
==================================

Datos de Cox de un abanico liso, presentación clásica de H^*(X) y
presentación cuántica de Batyrev, con números de Betti, productos
cuánticos y la verificación de rango sobre especializaciones de q.

Submodules:
    - services.cox_data: CoxData y build_cox_data
    - services.presentations: presentaciones clásica y cuántica, Betti
    - services.quantum: bases cuánticas, productos, verificación de rango

Example:
    Relación cuántica de P^2::

        from modules.fan_geometry.services.fan import load_fan
        from modules.cohomology_rings.services.cox_data import build_cox_data
        from modules.cohomology_rings.services.quantum import quantum_product

        cd = build_cox_data(load_fan("fixtures/p2.fan"))
        quantum_product(cd, (1, 1, 1))      # q1

Version:
    1.0.0
"""

from modules.cohomology_rings.services.cox_data import CoxData, build_cox_data
from modules.cohomology_rings.services.presentations import (
    Presentation, betti_numbers, classical_presentation, quantum_presentation,
)
from modules.cohomology_rings.services.quantum import quantum_product, quantum_rank_check

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "CoxData",
    "Presentation",
    "build_cox_data",
    "classical_presentation",
    "betti_numbers",
    "quantum_presentation",
    "quantum_rank_check",
    "quantum_product",
]
