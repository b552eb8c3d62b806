"""Datos de Cox, presentaciones clásica y cuántica, productos y verificación de rango."""

import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from core.exceptions import InputError, InvalidFan, InvalidQSpec, NotFano, NotInAPlus, ZeroQSpec
from modules.cohomology_rings.services.cox_data import build_cox_data
from modules.cohomology_rings.services.presentations import (
    QUANTUM_SPECIALIZED,
    QUANTUM_SYMBOLIC,
    betti_numbers,
    binomial_relation,
    check_q_spec,
    classical_presentation,
    q_monomial,
    quantum_presentation,
    specialize_q,
)
from modules.cohomology_rings.services.quantum import (
    classical_product,
    quantum_groebner,
    quantum_product,
    quantum_product_table,
    quantum_rank_check,
    quantum_standard_monomials,
    random_q_spec,
    specialized_dimension,
)
from modules.fan_geometry.services.fan import Fan
from modules.poly_engine.services.groebner import normal_form
from modules.poly_engine.services.polynomials import constant_poly, format_poly, substitute
from tests.fixtures.fans import BETTI, BUNDLED, cox


class TestCoxData:
    def test_p2(self, p2):
        assert p2.a_rank == p2.b_rank == 1
        assert p2.a_basis == ((1, 1, 1),)
        assert p2.degree((1,)) == 3

    def test_f1(self, f1):
        assert f1.a_basis == ((1, -1, 1, 0), (0, 1, 0, 1))
        assert f1.degree((0, 1)) == 2
        assert f1.degree((1, 1)) == 3
        assert f1.divisor_classes == ((1, 0), (-1, 1), (1, 0), (0, 1))

    def test_outside_a_plus(self, f1):
        with pytest.raises(NotInAPlus):
            f1.require_in_a_plus((1, 0))

    def test_rank_relation(self, bundled):
        assert bundled.b_rank == bundled.n_rays - bundled.dim

    def test_non_smooth_rejected(self):
        fan = Fan("P(1,1,2)", 2, ((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
        with pytest.raises(InvalidFan):
            build_cox_data(fan)


class TestPresentations:
    def test_classical_p2(self, p2):
        presentation = classical_presentation(p2)
        assert presentation.relation_texts() == ["x1 - x3", "x2 - x3", "x1*x2*x3"]

    def test_quantum_symbolic_p2(self, p2):
        presentation = quantum_presentation(p2)
        assert presentation.kind == QUANTUM_SYMBOLIC
        assert presentation.relation_texts() == ["x1 - x3", "x2 - x3", "x1*x2*x3 - q1", "q1*qinv - 1"]
        assert presentation.warnings == ()

    def test_quantum_specialized_f1(self, f1):
        presentation = quantum_presentation(f1, (Fraction(2), Fraction(-1, 3)))
        assert presentation.kind == QUANTUM_SPECIALIZED
        texts = presentation.relation_texts()
        assert "x2*x4 + 1/3" in texts
        assert "x1*x3*x4 + 2/3" in texts

    @pytest.mark.parametrize("name", BUNDLED)
    def test_betti(self, name):
        assert betti_numbers(cox(name)) == BETTI[name]

    def test_betti_palindromic(self, bundled):
        betti = betti_numbers(bundled)
        assert betti == tuple(reversed(betti))
        assert len(betti) == bundled.dim + 1

    def test_not_fano(self, f2):
        with pytest.raises(NotFano):
            quantum_presentation(f2)

    def test_not_fano_allowed_with_warning(self, f2):
        presentation = quantum_presentation(f2, allow_non_fano=True)
        assert len(presentation.warnings) == 1
        assert "F2" in presentation.warnings[0]

    def test_zero_q(self, p2):
        with pytest.raises(ZeroQSpec):
            check_q_spec(p2, [0])

    def test_wrong_q_length(self, p2):
        with pytest.raises(InvalidQSpec):
            check_q_spec(p2, [1, 2])

    def test_specialize_q_negative_exponent(self):
        assert specialize_q((Fraction(2), Fraction(3)), (-1, 2)) == Fraction(9, 2)

    @pytest.mark.parametrize("point", [(0, 1), (1, 1), (1, 2), (2, 3), (0, 3)])
    def test_binomials_of_a_plus_are_in_the_ideal(self, f1, point):
        presentation = quantum_presentation(f1)
        basis = quantum_groebner(presentation)
        relation = binomial_relation(f1, point, presentation.ring)
        assert not normal_form(relation, basis)


class TestProducts:
    def test_p2_cube(self, p2):
        assert format_poly(quantum_product(p2, (1, 1, 1))) == "q1"
        assert format_poly(quantum_product(p2, (1, 2, 3), q_spec=(Fraction(2),))) == "2"

    def test_p2_classical_cube_vanishes(self, p2):
        assert not classical_product(p2, (1, 1, 1))
        assert format_poly(classical_product(p2, (1, 2))) == "x3^2"

    def test_p1xp1(self, p1xp1):
        assert format_poly(quantum_product(p1xp1, (1, 3))) == "q1"
        assert format_poly(quantum_product(p1xp1, (2, 4))) == "q2"

    @pytest.mark.parametrize("name", ["p2", "p3"])
    def test_classical_agrees_in_low_degree(self, name):
        cd = cox(name)
        for factors in itertools.combinations_with_replacement(range(1, cd.n_rays + 1), 2):
            assert format_poly(quantum_product(cd, factors)) == format_poly(classical_product(cd, factors))

    def test_index_out_of_range(self, p2):
        with pytest.raises(InputError):
            quantum_product(p2, (1, 4))

    def test_table(self, p2):
        entries = quantum_product_table(p2, max_factors=2)
        assert [entry.factors for entry in entries] == [
            (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3),
        ]


class TestRankCheck:
    def test_random_q_spec(self):
        first = random_q_spec(3, random.Random(7))
        second = random_q_spec(3, random.Random(7))
        assert first == second
        assert all(value != 0 for value in first)

    def test_fano(self, fano):
        report = quantum_rank_check(fano, trials=2, seed=0)
        assert report.passed
        assert report.expected == sum(BETTI[fano.fan.name.lower()])
        assert len(report.trials) == 2

    def test_f1_at_one(self, f1):
        assert specialized_dimension(f1, (1, 1)) == 4

    def test_f2_requires_flag(self, f2):
        with pytest.raises(NotFano):
            quantum_rank_check(f2, trials=1, seed=0)

    def test_f2_with_flag_reports(self, f2):
        report = quantum_rank_check(f2, trials=1, seed=0, allow_non_fano=True)
        assert not report.fano
        assert report.warnings


class TestSymbolicBasis:
    def test_only_laurent_relation_has_q_in_leading_monomial(self, fano):
        basis = quantum_groebner(quantum_presentation(fano))
        n = fano.n_rays
        leading = basis.leading_monomials
        assert [lm for lm in leading if not any(lm[:n])] == [(0,) * n + (1,) * (fano.b_rank + 1)]
        assert all(not any(lm[n:]) for lm in leading if any(lm[:n]))

    def test_standard_monomials_follow_betti(self, fano):
        basis = quantum_groebner(quantum_presentation(fano))
        counts = Counter(sum(m) for m in quantum_standard_monomials(fano, basis))
        betti = BETTI[fano.fan.name.lower()]
        assert [counts[k] for k in range(len(betti))] == list(betti)
        assert sum(counts.values()) == sum(betti)

    def test_products_are_in_standard_monomials(self, fano):
        basis = quantum_groebner(quantum_presentation(fano))
        standard = set(quantum_standard_monomials(fano, basis))
        n = fano.n_rays
        for entry in quantum_product_table(fano, max_factors=2, basis=basis):
            assert all(m[:n] in standard for m in entry.value.itermonoms()), entry.factors

    def test_equal_classes_have_equal_products(self, f1):
        basis = quantum_groebner(quantum_presentation(f1))
        squares = {format_poly(quantum_product(f1, factors, basis=basis)) for factors in [(1, 1), (1, 3), (3, 3)]}
        assert len(squares) == 1

    @pytest.mark.parametrize("q_spec", [(2, 3), (-1, Fraction(1, 2)), (Fraction(-7, 3), 5)])
    def test_symbolic_products_specialize(self, f1, q_spec):
        symbolic = quantum_groebner(quantum_presentation(f1))
        specialized = quantum_groebner(quantum_presentation(f1, q_spec))
        ring = specialized.ring
        c1, c2 = (Fraction(c) for c in q_spec)
        images = list(ring.gens) + [constant_poly(ring, c) for c in (c1, c2, 1 / (c1 * c2))]
        for factors in itertools.combinations_with_replacement(range(1, f1.n_rays + 1), 2):
            value = quantum_product(f1, factors, basis=symbolic)
            assert substitute(value, images, ring) == quantum_product(f1, factors, basis=specialized)


class TestLaurentInverse:
    @pytest.fixture
    def permuted_f2(self):
        fan = Fan("F2p", 2, ((1, 0), (-1, 2), (0, 1), (0, -1)), ((0, 2), (1, 2), (1, 3), (0, 3)))
        return build_cox_data(fan)

    def test_hilbert_basis_has_negative_coordinate(self, permuted_f2):
        assert permuted_f2.a_basis == ((-1, -1, 2, 0), (0, 0, 1, 1))
        assert set(permuted_f2.semigroup.hilbert_basis) == {(0, 1), (-1, 2)}

    def test_relations_use_qinv(self, permuted_f2):
        presentation = quantum_presentation(permuted_f2, allow_non_fano=True)
        texts = presentation.relation_texts()
        assert "x1*x2*x4^2 - q2^3*qinv" in texts
        assert "x3*x4 - q2" in texts
        assert texts[-1] == "q1*q2*qinv - 1"
        assert format_poly(q_monomial(permuted_f2, (-1, 2), presentation.ring)) == "q2^3*qinv"

    @pytest.mark.parametrize("point", [(-1, 3), (-2, 4), (0, 2), (-1, 2)])
    def test_binomials_with_negative_coordinates(self, permuted_f2, point):
        presentation = quantum_presentation(permuted_f2, allow_non_fano=True)
        basis = quantum_groebner(presentation)
        assert not normal_form(binomial_relation(permuted_f2, point, presentation.ring), basis)
