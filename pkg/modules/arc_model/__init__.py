"""
toricarc - Arc Model Module
===========================

Modelo combinatorio de H^*(Lambda^0 X) como Sym(H^2(X)) con su estructura
de C[A_+]-módulo, la comparación de series de Cousin, la serie de Floer y
la verificación del isomorfismo con la cohomología cuántica.

Submodules:
    - services.model: ArcCohomologyModel, q_action, codimensiones y estratos
    - services.series: cousin_series_check, floer_series
    - services.verification: arc_specialization, verify_theorem_main

Example:
    Verificación para P^2::

        from modules.fan_geometry.services.fan import projective_space
        from modules.cohomology_rings.services.cox_data import build_cox_data
        from modules.arc_model.services.verification import verify_theorem_main

        report = verify_theorem_main(build_cox_data(projective_space(2)), trials=3, seed=0)
        report.passed       # True

Version:
    1.0.0
"""

from modules.arc_model.services.model import (
    ArcCohomologyModel, build_arc_model, q_action, self_embedding_codim, stratum_descriptor,
)
from modules.arc_model.services.series import cousin_series_check, floer_series
from modules.arc_model.services.verification import (
    arc_specialization, presentations_agree, verify_theorem_main,
)

__version__ = "1.0.0"
__author__ = "toricarc Development Team"

__all__ = [
    "ArcCohomologyModel",
    "build_arc_model",
    "q_action",
    "self_embedding_codim",
    "stratum_descriptor",
    "cousin_series_check",
    "floer_series",
    "arc_specialization",
    "presentations_agree",
    "verify_theorem_main",
]
