"""
toricarc - Validadores
======================

Funciones de validación para las entradas de la línea de comandos.
Todas retornan una tupla (es_válido, mensaje_error).
"""

import re
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

from core.utils.logger import get_logger

log = get_logger(__name__)

_INTEGER_LIST = re.compile(r'^\s*-?\d+(\s*,\s*-?\d+)*\s*$')
_RATIONAL = re.compile(r'^\s*-?\d+(/\d+)?\s*$')


def validate_file_exists(file_path: str | Path) -> Tuple[bool, str]:
    """
    Valida que un archivo existe.

    Args:
        file_path: Ruta del archivo

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    try:
        path = Path(file_path)
        if not path.exists():
            return False, f"El archivo no existe: {file_path}"
        if not path.is_file():
            return False, f"La ruta no es un archivo: {file_path}"
        return True, ""
    except Exception as e:
        return False, f"Error al validar archivo: {e}"


def validate_file_extension(file_path: str | Path,
                            allowed_extensions: list[str]) -> Tuple[bool, str]:
    """
    Valida que un archivo tiene una extensión permitida.

    Args:
        file_path: Ruta del archivo
        allowed_extensions: Lista de extensiones permitidas (ej: ['.fan', '.json'])

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    try:
        path = Path(file_path)
        ext = path.suffix.lower()

        # Normalizar extensiones permitidas
        allowed = [e.lower() if e.startswith('.') else f'.{e.lower()}'
                   for e in allowed_extensions]

        if ext not in allowed:
            return False, f"Extensión no permitida. Se esperaba: {', '.join(allowed)}"
        return True, ""
    except Exception as e:
        return False, f"Error al validar extensión: {e}"


def validate_fan_file(file_path: str | Path) -> Tuple[bool, str]:
    """
    Valida que un archivo de abanico existe y tiene extensión .fan o .json.

    Args:
        file_path: Ruta del archivo de abanico

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    valid, msg = validate_file_extension(file_path, ['.fan', '.json'])
    if not valid:
        return False, msg

    return validate_file_exists(file_path)


def validate_lattice_point(text: str, rank: Optional[int] = None) -> Tuple[bool, str]:
    """
    Valida un punto del retículo escrito como lista separada por comas.

    Args:
        text: Texto, por ejemplo "1,0,-2"
        rank: Número de coordenadas esperado (opcional)

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    if not text or not _INTEGER_LIST.match(text):
        return False, f"Punto del retículo inválido: '{text}' (use enteros separados por comas)"

    if rank is not None and len(text.split(',')) != rank:
        return False, f"El punto '{text}' debe tener {rank} coordenadas"

    return True, ""


def validate_q_spec(text: str) -> Tuple[bool, str]:
    """
    Valida una especialización de q: racionales no nulos separados por comas.

    Args:
        text: Texto, por ejemplo "2,-1/3"

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    if not text or not text.strip():
        return False, "La especialización de q está vacía"

    for item in text.split(','):
        if not _RATIONAL.match(item):
            return False, f"Valor de q inválido: '{item.strip()}'"
        try:
            value = Fraction(item.strip())
        except ZeroDivisionError:
            return False, f"Denominador nulo en el valor de q: '{item.strip()}'"
        if value == 0:
            return False, "Los valores de q deben ser no nulos (q es invertible)"

    return True, ""


def validate_number_range(value: float, min_value: Optional[float] = None,
                          max_value: Optional[float] = None) -> Tuple[bool, str]:
    """
    Valida que un número está en un rango válido.

    Args:
        value: Valor a validar
        min_value: Valor mínimo permitido
        max_value: Valor máximo permitido

    Returns:
        Tupla (es_válido, mensaje_error)
    """
    if min_value is not None and value < min_value:
        return False, f"El valor debe ser mayor o igual a {min_value}"

    if max_value is not None and value > max_value:
        return False, f"El valor debe ser menor o igual a {max_value}"

    return True, ""


def parse_lattice_point(text: str) -> Tuple[int, ...]:
    """Convierte "1,0,-2" en (1, 0, -2). Validar antes con validate_lattice_point."""
    return tuple(int(item) for item in text.split(','))


def parse_q_spec(text: str) -> Tuple[Fraction, ...]:
    """Convierte "2,-1/3" en (Fraction(2), Fraction(-1, 3))."""
    return tuple(Fraction(item.strip()) for item in text.split(','))


# Exportar validadores principales
__all__ = [
    'validate_file_exists',
    'validate_file_extension',
    'validate_fan_file',
    'validate_lattice_point',
    'validate_q_spec',
    'validate_number_range',
    'parse_lattice_point',
    'parse_q_spec',
]
