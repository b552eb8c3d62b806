"""
toricarc - Logging
==================

Sinks de loguru. Los reportes van a stdout, así que la consola de logs es
stderr y solo se activa con DEBUG_MODE; el archivo diario registra las
ejecuciones cuando LOG_TO_FILE está activo.
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from config.settings import Settings

_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {extra[module]} | {message}"


class ToricArcLogger:
    """Configura los sinks una sola vez por proceso."""

    _initialized = False

    @classmethod
    def initialize(cls):
        if cls._initialized:
            return
        logger.remove()
        logger.configure(extra={"module": "toricarc"})

        if Settings.DEBUG_MODE:
            logger.add(sys.stderr, format=_FORMAT, level="DEBUG", colorize=True)

        if Settings.LOG_TO_FILE:
            Settings.ensure_directories()
            logger.add(
                str(Path(Settings.LOG_PATH) / "toricarc_{time:YYYY-MM-DD}.log"),
                format=_FORMAT + "\n{exception}",
                level=Settings.LOG_LEVEL,
                rotation=f"{Settings.LOG_MAX_SIZE_MB} MB",
                retention=Settings.LOG_BACKUP_COUNT,
                backtrace=True,
            )

        cls._initialized = True

    @classmethod
    def get_logger(cls, name: Optional[str] = None):
        cls.initialize()
        return logger.bind(module=name) if name else logger


def get_logger(name: Optional[str] = None):
    """
    Logger de loguru ligado al nombre del módulo.

    Example:
        >>> log = get_logger(__name__)
        >>> log.debug("Base cuántica: 4 generadores")
    """
    return ToricArcLogger.get_logger(name)


def log_operation(module: str, action: str, success: bool = True,
                  message: str = "", error: Optional[Exception] = None, **context):
    """
    Registra el resultado de un subcomando en una línea.

    Args:
        module: Módulo que registra
        action: Subcomando
        success: INFO si es True, ERROR si no
        message: Resumen (código de salida o causa)
        error: Excepción que terminó el subcomando
        **context: Datos adicionales (p. ej. fan=...)
    """
    text = f"[{action}] {message}"
    if error is not None:
        text += f": {error}"
    if context:
        text += " | " + ", ".join(f"{key}={value}" for key, value in sorted(context.items()))
    get_logger(module).log("INFO" if success else "ERROR", text)


__all__ = ['get_logger', 'log_operation', 'ToricArcLogger', 'logger']
