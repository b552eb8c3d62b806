"""
toricarc - Subcomandos
======================

Cada subcomando produce un CommandResult con el reporte como diccionario
serializable (racionales como "p/q") y el código de salida. Los errores de
los módulos se propagan; solo VerificationFailed y RankMismatch se
convierten en reporte con código 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional

from cli.config import RunConfig
from core.exceptions import RankMismatch, VerificationFailed
from core.utils.file_handler import read_nonempty_lines
from core.utils.logger import get_logger
from core.utils.validators import parse_lattice_point, parse_q_spec
from modules.arc_model.services.model import self_embedding_codim, stratum_descriptor
from modules.arc_model.services.series import cousin_series_check, floer_series
from modules.arc_model.services.verification import verify_theorem_main
from modules.cohomology_rings.services.cox_data import CoxData, build_cox_data
from modules.cohomology_rings.services.presentations import (
    betti_numbers,
    classical_groebner,
    classical_presentation,
    quantum_presentation,
)
from modules.cohomology_rings.services.quantum import (
    RankCheckReport,
    quantum_groebner,
    quantum_product_table,
    quantum_rank_check,
    quantum_standard_monomials,
)
from modules.fan_geometry.services.combinatorics import f_vector, h_vector, primitive_collections
from modules.fan_geometry.services.fan import Fan, load_fan
from modules.fan_geometry.services.validation import validate_fan
from modules.jet_algebra.services.jets import jet_relations
from modules.jet_algebra.services.shifts import exceptional_jet_locus
from modules.poly_engine.services.groebner import GroebnerBasis, quotient_dimension
from modules.poly_engine.services.polynomials import format_poly, parse_poly_system

log = get_logger(__name__)

SCHEMA_VERSION = 1


@dataclass
class CommandResult:
    """Reporte de un subcomando y su código de salida."""

    payload: Dict[str, Any]
    exit_code: int = 0


def fractions(values: Optional[Iterable[Fraction]]) -> Optional[List[str]]:
    return None if values is None else [str(Fraction(c)) for c in values]


def basis_texts(basis: GroebnerBasis) -> List[str]:
    return [format_poly(g) for g in basis]


def _report(command: str, **fields) -> Dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, **fields}


def _fan(config: RunConfig) -> Fan:
    return load_fan(config.fan_path)


def _cox(config: RunConfig) -> CoxData:
    return build_cox_data(_fan(config))


# ===================================
# Subcomandos
# ===================================

def run_validate(config: RunConfig) -> CommandResult:
    fan = _fan(config)
    report = validate_fan(fan)
    payload = _report(
        "validate",
        fan=fan.name,
        dim=fan.dim,
        n_rays=fan.n_rays,
        validation=report.to_dict(),
        f_vector=list(f_vector(fan)),
        primitive_collections=[list(c) for c in primitive_collections(fan)] if report.simplicial else [],
    )
    return CommandResult(payload)


def run_cohomology(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    presentation = classical_presentation(cd)
    basis = classical_groebner(cd, config.budget)
    betti = betti_numbers(cd, config.budget)
    payload = _report(
        "cohomology",
        fan=cd.fan.name,
        rank_b=cd.b_rank,
        a_basis=[list(a) for a in cd.a_basis],
        hilbert_basis=[list(a) for a in cd.semigroup.hilbert_basis],
        divisor_classes=[list(c) for c in cd.divisor_classes],
        relations=presentation.relation_texts(),
        groebner_basis=basis_texts(basis),
        betti=list(betti),
        h_vector=list(h_vector(cd.fan)),
        total=sum(betti),
    )
    return CommandResult(payload)


def _rank_check_dict(report: RankCheckReport) -> Dict[str, Any]:
    return {
        "expected": report.expected,
        "fano": report.fano,
        "passed": report.passed,
        "trials": [
            {
                "index": trial.index,
                "q_spec": fractions(trial.q_spec),
                "dimension": trial.dimension,
                "ok": trial.ok,
            }
            for trial in report.trials
        ],
    }


def run_quantum(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    symbolic = config.symbolic or not config.q_spec
    q_spec = None if symbolic else parse_q_spec(config.q_spec)
    presentation = quantum_presentation(cd, q_spec, config.allow_non_fano)
    basis = quantum_groebner(presentation, config.budget)

    exit_code = 0
    try:
        rank = quantum_rank_check(cd, config.trials, config.seed, config.allow_non_fano, config.budget)
    except RankMismatch as e:
        log.error(e.message)
        rank, exit_code = e.details, 1

    table = quantum_product_table(cd, q_spec, 3, config.allow_non_fano, config.budget, basis=basis)
    payload = _report(
        "quantum",
        fan=cd.fan.name,
        kind=presentation.kind,
        q_spec=fractions(presentation.q_spec),
        relations=presentation.relation_texts(),
        groebner_basis=basis_texts(basis),
        dimension=len(quantum_standard_monomials(cd, basis)) if symbolic else quotient_dimension(basis),
        rank_check=_rank_check_dict(rank),
        product_table=[
            {"factors": list(entry.factors), "value": format_poly(entry.value)} for entry in table
        ],
        warnings=list(presentation.warnings),
    )
    return CommandResult(payload, exit_code)


def run_series(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    report = cousin_series_check(cd, config.cutoff)
    payload = _report(
        "series",
        fan=cd.fan.name,
        cutoff=report.cutoff,
        holds=report.holds,
        first_mismatch=report.first_mismatch,
        lhs=list(report.lhs),
        rhs=list(report.rhs),
        semigroup_series=list(report.semigroup_series),
        h_vector=list(report.h_polynomial),
        primitive_relations=[
            {
                "collection": list(collection),
                "relation": [[ray, coefficient] for ray, coefficient in sorted(relation.items())],
            }
            for collection, relation in report.primitive_relations
        ],
    )
    return CommandResult(payload)


def run_verify_main(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    try:
        report = verify_theorem_main(cd, config.trials, config.seed, config.allow_non_fano, config.budget)
        exit_code = 0
    except VerificationFailed as e:
        report, exit_code = e.details, 1
    return CommandResult(_report("verify-main", **report.to_dict()), exit_code)


def run_codim(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    a, b = parse_lattice_point(config.a), parse_lattice_point(config.b)
    codim = self_embedding_codim(cd, a, b)
    return CommandResult(_report("codim", fan=cd.fan.name, a=list(a), b=list(b), codim=codim))


def run_strata(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    descriptor = stratum_descriptor(cd, parse_lattice_point(config.a), betti_numbers(cd, config.budget))
    payload = _report(
        "strata",
        fan=cd.fan.name,
        a=list(descriptor.a),
        codim=descriptor.codim,
        poincare=list(descriptor.poincare),
        poincare_text=descriptor.poincare_text(),
    )
    return CommandResult(payload)


def run_floer(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    report = floer_series(cd, config.cutoff, config.allow_non_fano, config.budget)
    payload = _report(
        "floer",
        fan=cd.fan.name,
        rank=report.rank,
        shifts=list(report.shifts),
        period=report.period,
        quantum_rank=report.quantum_rank,
        matches_quantum=report.matches_quantum,
        graded_ranks=None if report.graded_ranks is None else list(report.graded_ranks),
        cutoff=report.cutoff,
    )
    return CommandResult(payload)


def run_locus(config: RunConfig) -> CommandResult:
    cd = _cox(config)
    components = exceptional_jet_locus(cd, config.order)
    payload = _report(
        "locus",
        fan=cd.fan.name,
        order=config.order,
        components=[
            {"collection": list(c.collection), "codim": c.codim, "generators": list(c.generators)}
            for c in components
        ],
    )
    return CommandResult(payload)


def run_jets(config: RunConfig) -> CommandResult:
    base = parse_poly_system(read_nonempty_lines(config.relations_path))
    presentation = jet_relations(base, config.order)
    relations = []
    for k in range(len(base)):
        for n in range(config.order + 1):
            relations.append({"k": k, "n": n, "text": format_poly(presentation.relation(k, n))})
    payload = _report(
        "jets",
        order=presentation.order,
        base_relations=[format_poly(f) for f in base],
        base_vars=list(presentation.base_vars),
        jet_vars=list(presentation.jet_vars),
        degrees=list(presentation.degrees),
        relations=relations,
    )
    return CommandResult(payload)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "validate": run_validate,
    "cohomology": run_cohomology,
    "quantum": run_quantum,
    "series": run_series,
    "verify-main": run_verify_main,
    "codim": run_codim,
    "strata": run_strata,
    "floer": run_floer,
    "locus": run_locus,
    "jets": run_jets,
}


__all__ = ['CommandResult', 'COMMANDS', 'SCHEMA_VERSION']
