"""
toricarc - CLI
==============

Interfaz de línea de comandos: argparse, ejecución de subcomandos y
presentación de reportes en texto o JSON.

Example:
    Desde Python::

        from cli import RunConfig, run

        code = run(RunConfig("verify-main", fan_path="fixtures/f1.fan"))

Version:
    1.0.0
"""

from cli.config import RunConfig, build_parser
from cli.runner import main, run

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = ["RunConfig", "build_parser", "main", "run"]
