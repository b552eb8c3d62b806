"""
Criterios de aceptación: familia P^{N-1}, anidamiento de los espacios de
arcos, rango de las especializaciones aleatorias, jets contra la expansión
en series y ley de semigrupo de epsilon_a.
"""

import random
from fractions import Fraction

import pytest
from sympy import Symbol, expand

from modules.arc_model.services.model import build_arc_model, self_embedding_codim
from modules.arc_model.services.series import cousin_series_check, floer_series
from modules.arc_model.services.verification import verify_theorem_main
from modules.cohomology_rings.services.cox_data import build_cox_data
from modules.cohomology_rings.services.presentations import betti_numbers
from modules.cohomology_rings.services.quantum import quantum_product, quantum_rank_check
from modules.fan_geometry.services.fan import projective_space
from modules.jet_algebra.services.jets import jet_relations
from modules.jet_algebra.services.shifts import cox_jet_ring, epsilon_shift
from modules.poly_engine.services.polynomials import format_poly, make_ring, parse_poly
from tests.fixtures.fans import BETTI, BUNDLED, FANO, cox


def random_a_plus_point(cd, rng: random.Random, max_multiplicity: int = 3):
    """Combinación no negativa aleatoria de la base de Hilbert."""
    point = [0] * cd.a_rank
    for generator in cd.semigroup.hilbert_basis:
        multiplicity = rng.randint(0, max_multiplicity)
        point = [p + multiplicity * g for p, g in zip(point, generator)]
    return tuple(point)


def random_base_poly(ring, rng: random.Random) -> str:
    terms = []
    for _ in range(rng.randint(1, 4)):
        coefficient = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        exponents = [rng.randint(0, 2) for _ in ring.symbols]
        monomial = "*".join(f"{s}^{e}" for s, e in zip(ring.symbols, exponents))
        terms.append(f"({coefficient})*{monomial}")
    return " + ".join(terms)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_projective_spaces(n):
    cd = build_cox_data(projective_space(n))
    assert betti_numbers(cd) == (1,) * (n + 1)
    assert cd.semigroup.hilbert_basis == ((1,),)

    report = verify_theorem_main(cd, trials=1, seed=n)
    assert report.passed
    assert report.betti_total == n + 1
    assert cousin_series_check(cd, 12).holds

    floer = floer_series(cd, 2)
    assert floer.rank == n + 1
    assert floer.shifts == (2 * (n + 1),)

    cube = (1,) * (n + 1)
    assert format_poly(quantum_product(cd, cube)) == "q1"


@pytest.mark.parametrize("name", BUNDLED)
def test_nested_codimensions(name):
    cd = cox(name)
    rng = random.Random(2024)
    for _ in range(20):
        a = random_a_plus_point(cd, rng)
        for step in cd.semigroup.hilbert_basis:
            b = tuple(x + y for x, y in zip(a, step))
            order = max(cd.beta.apply(b))
            codim = self_embedding_codim(cd, a, b)
            assert codim == cd.degree(step)
            assert codim == epsilon_shift(cd, step, order).image_codim()
            assert codim == (
                epsilon_shift(cd, b, order).image_codim() - epsilon_shift(cd, a, order).image_codim()
            )
        assert self_embedding_codim(cd, a, a) == 0


@pytest.mark.parametrize("name", FANO)
def test_random_specializations_have_full_rank(name):
    report = quantum_rank_check(cox(name), trials=5, seed=2024)
    assert len(report.trials) == 5
    assert report.passed
    assert {trial.dimension for trial in report.trials} == {sum(BETTI[name])}


@pytest.mark.slow
@pytest.mark.parametrize("name", FANO)
def test_verify_main_five_trials(name):
    report = verify_theorem_main(cox(name), trials=5, seed=2024)
    assert report.passed
    assert len(report.trials) == 5
    assert all(trial.ok for trial in report.trials)


@pytest.mark.slow
def test_jets_against_series_expansion():
    rng = random.Random(7)
    t = Symbol("t")
    checked = 0
    while checked < 100:
        ring = make_ring([f"u{j + 1}" for j in range(rng.randint(1, 3))])
        base = parse_poly(random_base_poly(ring, rng), ring)
        m = rng.randint(0, 4)
        if not base:
            continue
        jets = jet_relations([base], m)
        substitution = {
            symbol: sum(Symbol(f"{symbol}_{l}") * t**l for l in range(m + 1))
            for symbol in ring.symbols
        }
        expanded = expand(base.as_expr().subs(substitution, simultaneous=True))
        for n in range(m + 1):
            assert expand(jets.relation(0, n).as_expr() - expanded.coeff(t, n)) == 0
        checked += 1


@pytest.mark.parametrize("name", BUNDLED)
def test_shift_semigroup_law(name):
    cd = cox(name)
    model = build_arc_model(cd)
    rng = random.Random(99)
    m = 3
    ring = cox_jet_ring(cd, m)
    gens = ring.gens
    sample = sum(gen * (k + 1) for k, gen in enumerate(gens)) + gens[0] * gens[-1] + gens[len(gens) // 2] ** 2
    for _ in range(50):
        a = random_a_plus_point(cd, rng, max_multiplicity=2)
        b = random_a_plus_point(cd, rng, max_multiplicity=2)
        total = tuple(x + y for x, y in zip(a, b))
        first, second = epsilon_shift(cd, a, m), epsilon_shift(cd, b, m)
        combined = epsilon_shift(cd, total, m).apply(sample)
        assert first.apply(second.apply(sample)) == combined
        assert second.apply(first.apply(sample)) == combined
        assert model.mu(a) * model.mu(b) == model.mu(total)
