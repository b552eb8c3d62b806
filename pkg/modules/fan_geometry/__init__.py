"""
toricarc - Fan Geometry Module
==============================

Lectura y validación de abanicos (simplicial, liso, emparejado en facetas,
Fano), colecciones primitivas y combinatoria f/h.

Submodules:
    - services.fan: Fan, formato de archivo y biblioteca de abanicos
    - services.validation: ValidationReport y validate_fan
    - services.combinatorics: colecciones primitivas, f/h-vector

Example:
    Validar un abanico incluido::

        from modules.fan_geometry.services.fan import load_fan
        from modules.fan_geometry.services.validation import validate_fan

        report = validate_fan(load_fan("fixtures/f2.fan"))
        report.fano         # False

Version:
    1.0.0
"""

from modules.fan_geometry.services.combinatorics import (
    PrimitiveCollectionSet, f_vector, h_vector, primitive_collections, primitive_relation,
)
from modules.fan_geometry.services.fan import Fan, load_fan, parse_fan, serialize_fan
from modules.fan_geometry.services.validation import ValidationReport, validate_fan

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "Fan",
    "PrimitiveCollectionSet",
    "ValidationReport",
    "parse_fan",
    "serialize_fan",
    "load_fan",
    "validate_fan",
    "primitive_collections",
    "f_vector",
    "h_vector",
    "primitive_relation",
]
