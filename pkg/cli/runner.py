"""
toricarc - Ejecución de la CLI
==============================

run() ejecuta un RunConfig, escribe el reporte en stdout y devuelve el
código de salida: 0 éxito, 1 fallo de verificación o de cálculo, 2 error
de entrada. Los diagnósticos van a stderr en una sola línea.
"""

import sys
from typing import List, Optional, TextIO

from cli.commands import COMMANDS
from cli.config import RunConfig, config_from_args
from cli.render import ReportRenderer
from config.settings import Settings
from core.exceptions import ToricArcError
from core.utils.logger import get_logger, log_operation

log = get_logger(__name__)


def run(config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Ejecuta un subcomando.

    Args:
        config: Configuración de la ejecución
        stdout: Destino del reporte (por defecto sys.stdout)
        stderr: Destino de los diagnósticos (por defecto sys.stderr)

    Returns:
        Código de salida
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        valid, message = config.validate()
    except (ValueError, ZeroDivisionError) as e:
        valid, message = False, f"Argumento inválido: {e}"
    if not valid:
        log_operation("cli", config.subcommand, False, message)
        stderr.write(f"toricarc: error: {message}\n")
        return 2

    try:
        result = COMMANDS[config.subcommand](config)
    except ToricArcError as e:
        log_operation("cli", config.subcommand, False, type(e).__name__, error=e)
        stderr.write(f"toricarc: {type(e).__name__}: {e.message}\n")
        return e.exit_code
    except Exception as e:
        log.exception(e)
        stderr.write(f"toricarc: error interno: {e}\n")
        return 1

    stdout.write(ReportRenderer().render(result.payload, config.format))
    log_operation(
        "cli", config.subcommand, result.exit_code == 0,
        f"código de salida {result.exit_code}",
        fan=config.fan_path or config.relations_path,
    )
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Punto de entrada de la línea de comandos."""
    config = config_from_args(argv)
    log.debug(f"Iniciando {Settings.APP_NAME} v{Settings.APP_VERSION}: {Settings.get_info()}")
    return run(config)


__all__ = ['run', 'main']
