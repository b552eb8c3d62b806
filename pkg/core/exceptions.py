"""
toricarc - Excepciones
======================

Jerarquía de errores del sistema. Cada clase conoce el código de salida
que la CLI debe devolver:

    0  éxito / verificado
    1  fallo de verificación o de cálculo
    2  error de entrada
"""

from typing import Any, Optional


class ToricArcError(Exception):
    """Error base de toricarc."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details


# ===================================
# Errores de entrada (exit 2)
# ===================================

class InputError(ToricArcError):
    """Entrada inválida (archivo, formato o parámetros)."""

    exit_code = 2


class ParseError(InputError):
    """Sintaxis incorrecta en un archivo de abanico o de polinomios."""


class InvariantError(InputError):
    """El abanico viola un invariante estructural."""


class TorsionCokernel(InputError):
    """El grupo B = Z^N / M tiene torsión (abanico no liso)."""


class NonPointed(InputError):
    """El semigrupo A_+ no es puntiagudo (beta no es inyectiva)."""


class InvalidFan(InputError):
    """El abanico no es liso o no está emparejado en facetas."""


class NotFano(InputError):
    """Se requiere un abanico Fano y no se indicó --allow-non-fano."""


class ZeroQSpec(InputError):
    """Algún valor de q es cero (q debe ser invertible)."""


class InvalidQSpec(InputError):
    """La especialización de q no tiene la longitud correcta."""


class NotInAPlus(InputError):
    """El punto del retículo no pertenece a A_+."""


class NotNested(InputError):
    """b - a no pertenece a A_+, los espacios no están anidados."""


class NotHomogeneous(InputError):
    """El ideal no es homogéneo."""


# ===================================
# Errores de cálculo / verificación (exit 1)
# ===================================

class ComputationError(ToricArcError):
    """Fallo de un cálculo exacto o de una verificación."""


class BudgetExceeded(ComputationError):
    """Se agotó el presupuesto de reducciones de Buchberger."""


class InfiniteDimension(ComputationError):
    """El cociente tiene dimensión infinita y no se dio un tope de grado."""


class HilbertBasisNotStable(ComputationError):
    """La base de Hilbert no se estabilizó dentro de la caja máxima."""


class MismatchWithHVector(ComputationError):
    """Los números de Betti no coinciden con el h-vector."""


class RankMismatch(ComputationError):
    """Una especialización de q dio una dimensión distinta de la esperada."""


class VerificationFailed(ComputationError):
    """Algún veredicto de la verificación del teorema es falso."""


__all__ = [
    'ToricArcError', 'InputError', 'ParseError', 'InvariantError',
    'TorsionCokernel', 'NonPointed', 'InvalidFan', 'NotFano', 'ZeroQSpec',
    'InvalidQSpec', 'NotInAPlus', 'NotNested', 'NotHomogeneous',
    'ComputationError', 'BudgetExceeded', 'InfiniteDimension',
    'HilbertBasisNotStable', 'MismatchWithHVector', 'RankMismatch',
    'VerificationFailed',
]
