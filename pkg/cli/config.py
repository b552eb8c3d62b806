"""
toricarc - Configuración de la CLI
==================================

RunConfig reúne los argumentos de un subcomando; build_parser define la
interfaz de argparse.
"""

import argparse
from dataclasses import dataclass
from typing import List, Optional, Tuple

from config.settings import Settings
from core.utils.validators import (
    validate_fan_file,
    validate_file_exists,
    validate_lattice_point,
    validate_number_range,
    validate_q_spec,
)

FORMATS = ("text", "json")

FAN_COMMANDS = (
    "validate", "cohomology", "quantum", "series", "verify-main",
    "codim", "strata", "floer", "locus",
)
SUBCOMMANDS = FAN_COMMANDS + ("jets",)


@dataclass
class RunConfig:
    """Parámetros de una ejecución de la CLI.

    Attributes:
        subcommand: Nombre del subcomando
        fan_path: Archivo de abanico (subcomandos que lo consumen)
        relations_path: Archivo de relaciones base (subcomando jets)
        cutoff: Grado máximo de las series
        trials: Número de especializaciones aleatorias de q
        seed: Semilla de las especializaciones
        format: 'text' o 'json'
        allow_non_fano: Acepta abanicos no Fano con advertencia
        budget: Tope de reducciones (None = Settings.REDUCTION_BUDGET)
        q_spec: Especialización de q en texto (subcomando quantum)
        symbolic: Fuerza la presentación simbólica (excluye q_spec)
    """

    subcommand: str
    fan_path: Optional[str] = None
    relations_path: Optional[str] = None
    cutoff: int = Settings.DEFAULT_CUTOFF
    trials: int = Settings.DEFAULT_TRIALS
    seed: int = Settings.DEFAULT_SEED
    format: str = "text"
    allow_non_fano: bool = False
    budget: Optional[int] = None
    q_spec: Optional[str] = None
    symbolic: bool = False
    a: Optional[str] = None
    b: Optional[str] = None
    order: Optional[int] = None

    def validate(self) -> Tuple[bool, str]:
        """
        Valida la configuración antes de ejecutar.

        Returns:
            Tupla (es_válido, mensaje_error)
        """
        if self.subcommand not in SUBCOMMANDS:
            return False, f"Subcomando desconocido: {self.subcommand}"
        if self.format not in FORMATS:
            return False, f"Formato desconocido: {self.format} (use text o json)"

        checks = [
            validate_number_range(self.cutoff, min_value=1),
            validate_number_range(self.trials, min_value=1),
        ]
        if self.budget is not None:
            checks.append(validate_number_range(self.budget, min_value=1))

        if self.subcommand in FAN_COMMANDS:
            if not self.fan_path:
                return False, "Falta el archivo de abanico"
            checks.append(validate_fan_file(self.fan_path))
        else:
            if not self.relations_path:
                return False, "Falta el archivo de relaciones"
            checks.append(validate_file_exists(self.relations_path))

        if self.subcommand in ("jets", "locus"):
            if self.order is None:
                return False, "Falta --order"
            checks.append(validate_number_range(self.order, min_value=0))
        if self.q_spec is not None:
            if self.symbolic:
                return False, "--symbolic y --q-spec son excluyentes"
            checks.append(validate_q_spec(self.q_spec))
        if self.subcommand in ("codim", "strata"):
            if self.a is None:
                return False, "Falta --a"
            checks.append(validate_lattice_point(self.a))
        if self.subcommand == "codim":
            if self.b is None:
                return False, "Falta --b"
            checks.append(validate_lattice_point(self.b))

        for valid, message in checks:
            if not valid:
                return False, message
        return True, ""


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default="text", help="Formato del reporte")
    parent.add_argument("--seed", type=int, default=Settings.DEFAULT_SEED, help="Semilla")
    parent.add_argument("--trials", type=int, default=Settings.DEFAULT_TRIALS,
                        help="Especializaciones aleatorias de q")
    parent.add_argument("--cutoff", type=int, default=Settings.DEFAULT_CUTOFF, help="Grado máximo")
    parent.add_argument("--allow-non-fano", action="store_true",
                        help="Acepta abanicos no Fano (con advertencia)")
    parent.add_argument("--budget", type=int, default=None,
                        help="Tope de reducciones de Buchberger (env TORICARC_BUDGET)")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Parser de argparse con un subparser por subcomando."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="toricarc",
        description="Cohomología cuántica de variedades tóricas y espacios de arcos",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {Settings.APP_VERSION}")
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMANDO")

    def fan_command(name: str, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument("fan_path", metavar="FAN", help="Archivo de abanico (.fan)")
        return command

    fan_command("validate", "Valida el abanico")
    fan_command("cohomology", "Presentación clásica y números de Betti")
    quantum = fan_command("quantum", "Presentación cuántica, rango y tabla de productos")
    mode = quantum.add_mutually_exclusive_group()
    mode.add_argument("--q-spec", dest="q_spec", help="Valores de q, p. ej. 2,-1/3")
    mode.add_argument("--symbolic", action="store_true", help="q simbólico (por defecto)")
    fan_command("series", "Identidad de series de Cousin")
    fan_command("verify-main", "Verifica el isomorfismo con la cohomología cuántica")
    codim = fan_command("codim", "Codimensión de Lambda^b X en Lambda^a X")
    codim.add_argument("--a", required=True, help="Punto a de A_+, p. ej. 1,0")
    codim.add_argument("--b", required=True, help="Punto b con b - a en A_+")
    strata = fan_command("strata", "Descriptor del estrato Lambda^{=a} X")
    strata.add_argument("--a", required=True, help="Punto a de A_+")
    fan_command("floer", "Rango y desplazamientos de HF(Lambda X)")
    locus = fan_command("locus", "Lugar excepcional de jets truncado")
    locus.add_argument("--order", type=int, required=True, help="Orden de truncación m")

    jets = sub.add_parser("jets", parents=[common], help="Relaciones de jets de orden m")
    jets.add_argument("relations_path", metavar="RELACIONES", help="Una relación base por línea")
    jets.add_argument("--order", type=int, required=True, help="Orden de truncación m")
    return parser


def config_from_args(argv: Optional[List[str]] = None) -> RunConfig:
    """Interpreta argv (sale con código 2 si la sintaxis es inválida)."""
    args = build_parser().parse_args(argv)
    return RunConfig(
        subcommand=args.subcommand,
        fan_path=getattr(args, "fan_path", None),
        relations_path=getattr(args, "relations_path", None),
        cutoff=args.cutoff,
        trials=args.trials,
        seed=args.seed,
        format=args.format,
        allow_non_fano=args.allow_non_fano,
        budget=args.budget,
        q_spec=getattr(args, "q_spec", None),
        symbolic=getattr(args, "symbolic", False),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None),
        order=getattr(args, "order", None),
    )


__all__ = ['RunConfig', 'FORMATS', 'SUBCOMMANDS', 'build_parser', 'config_from_args']
