"""
toricarc - Manejador de Archivos
================================

Utilidades para leer archivos de entrada y escribir reportes.
"""

import json
from pathlib import Path
from typing import Any, List

from core.exceptions import InputError, ParseError
from core.utils.logger import get_logger

log = get_logger(__name__)


def read_text_file(path: str | Path) -> str:
    """
    Lee un archivo de texto UTF-8.

    Args:
        path: Ruta del archivo

    Returns:
        Contenido del archivo

    Raises:
        InputError: Si el archivo no existe o no se puede leer
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
        log.debug(f"Archivo leído: {path} ({len(text)} caracteres)")
        return text
    except FileNotFoundError as e:
        raise InputError(f"Archivo no encontrado: {path}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"No se pudo leer {path}: {e}") from e


def read_nonempty_lines(path: str | Path) -> List[str]:
    """
    Lee las líneas no vacías de un archivo, ignorando comentarios '#'.

    Args:
        path: Ruta del archivo

    Returns:
        Lista de líneas sin espacios en los extremos
    """
    lines = []
    for line in read_text_file(path).splitlines():
        line = line.strip()
        if line and not line.startswith('#'):
            lines.append(line)
    return lines


def load_json_text(text: str, source: str = "<texto>") -> Any:
    """
    Decodifica JSON, convirtiendo los errores de sintaxis en ParseError.

    Args:
        text: Texto JSON
        source: Nombre del origen (para el mensaje de error)

    Returns:
        Objeto decodificado
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON inválido en {source}: línea {e.lineno}, columna {e.colno}: {e.msg}") from e


def dump_json(data: Any) -> str:
    """Serialización JSON determinista (claves ordenadas, indentación 2)."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


__all__ = [
    'read_text_file',
    'read_nonempty_lines',
    'load_json_text',
    'dump_json',
]
