"""
toricarc - Jet Algebra Module
=============================

Relaciones truncadas del álgebra de arcos y los desplazamientos
epsilon_a sobre las coordenadas de jets.

Submodules:
    - services.jets: TruncatedSeries, JetPresentation, jet_relations
    - services.shifts: ShiftMap, epsilon_shift, exceptional_jet_locus

Example:
    Jets de u1*u2 - 1 en orden 1::

        from modules.poly_engine.services.polynomials import make_ring, parse_poly
        from modules.jet_algebra.services.jets import jet_relations

        ring = make_ring(["u1", "u2"])
        jets = jet_relations([parse_poly("u1*u2 - 1", ring)], 1)
        # u1_0*u2_0 - 1, u1_0*u2_1 + u1_1*u2_0

Version:
    1.0.0
"""

from modules.jet_algebra.services.jets import JetPresentation, jet_relations
from modules.jet_algebra.services.shifts import ShiftMap, epsilon_shift, exceptional_jet_locus

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "JetPresentation",
    "ShiftMap",
    "jet_relations",
    "epsilon_shift",
    "exceptional_jet_locus",
]
