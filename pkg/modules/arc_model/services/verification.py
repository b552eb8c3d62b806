"""
toricarc - Verificación del Teorema Principal
=============================================

Certifica a escala de escritorio que la localización de H^*(Lambda^0 X)
es isomorfa a la cohomología cuántica de Batyrev especializada:

    1. Buena definición: x_i -> z_i anula las formas lineales y
       mu(a_k) coincide con el producto de las clases sobre la imagen de
       la auto-inmersión epsilon_{a_k}.
    2. Sobreyectividad: las z_i generan Sym(B ⊗ Q) (rango r).
    3. Rango: en cada especialización sembrada de q, el cociente cuántico y
       el cociente del modelo de arcos tienen dimensión sum Betti y sus
       bases de Gröbner coinciden tras x_i -> z_i.

La identidad de series de Cousin se reporta junto a los veredictos, sin
condicionarlos.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from config.settings import Settings
from core.exceptions import NotFano, ToricArcError, VerificationFailed
from core.utils.logger import get_logger
from modules.arc_model.services.model import ArcCohomologyModel, build_arc_model
from modules.arc_model.services.series import cousin_series_check
from modules.cohomology_rings.services.cox_data import CoxData
from modules.cohomology_rings.services.presentations import (
    betti_numbers,
    check_q_spec,
    linear_relations,
    quantum_presentation,
    specialize_q,
    x_names,
)
from modules.cohomology_rings.services.quantum import quantum_groebner, random_q_spec
from modules.jet_algebra.services.shifts import epsilon_shift
from modules.poly_engine.services.groebner import GroebnerBasis, buchberger, quotient_dimension
from modules.poly_engine.services.orders import DEGREVLEX
from modules.poly_engine.services.polynomials import (
    constant_poly,
    format_poly,
    make_ring,
    substitute,
    to_fraction,
)

log = get_logger(__name__)


@dataclass(frozen=True)
class ArcSpecialization:
    """Cociente Sym(V) / (mu(a_k) - c^{a_k})."""

    q_spec: Tuple[Fraction, ...]
    basis: GroebnerBasis
    dimension: int


def arc_specialization(model: ArcCohomologyModel, q_spec: Sequence,
                       budget: Optional[int] = None) -> ArcSpecialization:
    """
    Especializa el módulo localizado: q^{a_k} actúa como el escalar c^{a_k}.

    Args:
        model: Modelo de arcos (contiene los datos de Cox)
        q_spec: Valores no nulos c_1..c_r
        budget: Tope de reducciones

    Returns:
        ArcSpecialization con base de Gröbner reducida y dimensión

    Raises:
        ZeroQSpec, InvalidQSpec: Especialización inválida
        InfiniteDimension: Si el cociente no es finito
    """
    cd = model.cox
    values = check_q_spec(cd, q_spec)
    relations = [
        model.mu(a) - constant_poly(model.ring, specialize_q(values, a))
        for a in cd.semigroup.hilbert_basis
    ]
    basis = buchberger(relations, DEGREVLEX, budget)
    return ArcSpecialization(values, basis, quotient_dimension(basis))


def _specialized_quantum_basis(cd: CoxData, q_spec: Sequence, allow_non_fano: bool,
                               budget: Optional[int]) -> GroebnerBasis:
    return quantum_groebner(quantum_presentation(cd, q_spec, allow_non_fano), budget)


def _mapped_basis(model: ArcCohomologyModel, quantum_basis: GroebnerBasis,
                  budget: Optional[int]) -> GroebnerBasis:
    images = [substitute(g, list(model.z_classes), model.ring) for g in quantum_basis]
    if not images:
        images = [model.ring.zero]
    return buchberger(images, DEGREVLEX, budget)


def presentations_agree(cd: CoxData, q_spec: Sequence, allow_non_fano: bool = False,
                        budget: Optional[int] = None,
                        model: Optional[ArcCohomologyModel] = None) -> bool:
    """
    Compara la base cuántica especializada, llevada por x_i -> z_i, con la
    base del modelo de arcos (comparación sintáctica de formas canónicas).
    """
    model = model or build_arc_model(cd)
    mapped = _mapped_basis(model, _specialized_quantum_basis(cd, q_spec, allow_non_fano, budget), budget)
    arc = arc_specialization(model, q_spec, budget).basis
    return [format_poly(g) for g in mapped] == [format_poly(g) for g in arc]


@dataclass(frozen=True)
class TheoremTrial:
    """Una especialización de q dentro del veredicto de rango."""

    index: int
    q_spec: Tuple[Fraction, ...]
    quantum_dimension: Optional[int]
    arc_dimension: Optional[int]
    agree: bool
    expected: int
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return (
            self.error is None
            and self.agree
            and self.quantum_dimension == self.expected
            and self.arc_dimension == self.expected
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "q_spec": [str(c) for c in self.q_spec],
            "quantum_dimension": self.quantum_dimension,
            "arc_dimension": self.arc_dimension,
            "presentations_agree": self.agree,
            "ok": self.ok,
            "error": self.error,
        }


@dataclass(frozen=True)
class TheoremReport:
    """Veredictos de la verificación.

    Attributes:
        well_defined: Las relaciones cuánticas se cumplen en el modelo
        surjective: Las clases z_i generan el modelo
        rank_equal: Todas las pruebas dan dimensión sum Betti en ambos lados
        betti_total: sum Betti de X
        trials: Detalle de cada especialización
        cousin_series_holds: Identidad de series de Cousin (informativa)
        problems: Mensajes de los veredictos fallidos
    """

    fan: str
    well_defined: bool
    surjective: bool
    rank_equal: bool
    betti_total: int
    trials: Tuple[TheoremTrial, ...]
    cousin_series_holds: bool
    problems: Tuple[str, ...] = field(default=())
    warnings: Tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.well_defined and self.surjective and self.rank_equal

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fan": self.fan,
            "well_defined": self.well_defined,
            "surjective": self.surjective,
            "rank_equal": self.rank_equal,
            "betti_total": self.betti_total,
            "trials": [trial.to_dict() for trial in self.trials],
            "cousin_series_holds": self.cousin_series_holds,
            "passed": self.passed,
            "problems": list(self.problems),
            "warnings": list(self.warnings),
        }


def _check_well_defined(cd: CoxData, model: ArcCohomologyModel) -> List[str]:
    problems = []
    x_ring = make_ring(x_names(cd), DEGREVLEX)
    for j, relation in enumerate(linear_relations(cd, x_ring)):
        image = substitute(relation, list(model.z_classes), model.ring)
        if image:
            problems.append(f"la forma lineal {j + 1} no se anula en el modelo: {format_poly(image)}")

    hilbert = cd.semigroup.hilbert_basis
    m = max((max(cd.beta_of(a)) for a in hilbert), default=0)
    for a in hilbert:
        product = model.ring.one
        for i, _ in epsilon_shift(cd, a, m).image_generators():
            product = product * model.z_classes[i]
        if product != model.mu(a):
            problems.append(f"mu({a}) no coincide con el producto sobre la imagen de epsilon_a")
    return problems


def _check_surjective(model: ArcCohomologyModel) -> bool:
    rows = []
    for z in model.z_classes:
        row = []
        for y in model.ring.gens:
            value = to_fraction(z.coeff(y))
            row.append(Rational(value.numerator, value.denominator))
        rows.append(row)
    if not rows or model.r == 0:
        return model.r == 0
    return Matrix(rows).rank() == model.r


def _run_trial(cd: CoxData, model: ArcCohomologyModel, index: int, q_spec: Tuple[Fraction, ...],
               expected: int, allow_non_fano: bool, budget: Optional[int]) -> TheoremTrial:
    try:
        quantum_basis = _specialized_quantum_basis(cd, q_spec, allow_non_fano, budget)
        quantum_dimension = quotient_dimension(quantum_basis)
        arc = arc_specialization(model, q_spec, budget)
        mapped = _mapped_basis(model, quantum_basis, budget)
        agree = [format_poly(g) for g in mapped] == [format_poly(g) for g in arc.basis]
    except ToricArcError as e:
        log.warning(f"Prueba {index} de {cd.fan.name} falló: {e.message}")
        return TheoremTrial(index, q_spec, None, None, False, expected, e.message)
    return TheoremTrial(index, q_spec, quantum_dimension, arc.dimension, agree, expected)


def verify_theorem_main(cd: CoxData, trials: Optional[int] = None, seed: Optional[int] = None,
                        allow_non_fano: bool = False,
                        budget: Optional[int] = None) -> TheoremReport:
    """
    Verifica el isomorfismo de la localización con la cohomología cuántica.

    Args:
        cd: Datos de Cox de un abanico Fano
        trials: Número de especializaciones (por defecto Settings.DEFAULT_TRIALS)
        seed: Semilla (por defecto Settings.DEFAULT_SEED)
        allow_non_fano: Acepta abanicos no Fano con advertencia
        budget: Tope de reducciones

    Returns:
        TheoremReport con los tres veredictos verdaderos

    Raises:
        NotFano: Abanico no Fano sin allow_non_fano
        VerificationFailed: Si algún veredicto es falso (details = TheoremReport)
    """
    trials = Settings.DEFAULT_TRIALS if trials is None else trials
    seed = Settings.DEFAULT_SEED if seed is None else seed
    warnings: List[str] = []
    if not cd.is_fano:
        if not allow_non_fano:
            raise NotFano(f"{cd.fan.name} no es Fano; use --allow-non-fano para continuar")
        warnings.append(f"{cd.fan.name} no es Fano: los veredictos son solo informativos")
        log.warning(warnings[-1])

    model = build_arc_model(cd)
    problems = _check_well_defined(cd, model)
    well_defined = not problems

    surjective = _check_surjective(model)
    if not surjective:
        problems.append(f"las clases z_i no generan Sym(B ⊗ Q) de rango {model.r}")

    betti_total = sum(betti_numbers(cd, budget))
    rng = random.Random(seed)
    results = []
    for index in range(trials):
        q_spec = random_q_spec(cd.b_rank, rng)
        results.append(_run_trial(cd, model, index, q_spec, betti_total, allow_non_fano, budget))
    rank_equal = all(trial.ok for trial in results)
    for trial in results:
        if not trial.ok:
            problems.append(
                f"prueba {trial.index}: dim cuántica {trial.quantum_dimension}, "
                f"dim de arcos {trial.arc_dimension}, esperado {betti_total}"
            )

    cousin = cousin_series_check(cd, Settings.DEFAULT_CUTOFF)
    report = TheoremReport(
        fan=cd.fan.name,
        well_defined=well_defined,
        surjective=surjective,
        rank_equal=rank_equal,
        betti_total=betti_total,
        trials=tuple(results),
        cousin_series_holds=cousin.holds,
        problems=tuple(problems),
        warnings=tuple(warnings),
    )
    if not report.passed:
        log.error(f"Verificación de {cd.fan.name} fallida: {'; '.join(problems)}")
        raise VerificationFailed(f"La verificación de {cd.fan.name} falló: {problems[0]}", details=report)

    log.success(f"Teorema verificado para {cd.fan.name} ({trials} pruebas, sum Betti = {betti_total})")
    return report


__all__ = [
    'ArcSpecialization',
    'TheoremTrial',
    'TheoremReport',
    'arc_specialization',
    'presentations_agree',
    'verify_theorem_main',
]
