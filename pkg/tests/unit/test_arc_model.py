"""Modelo Sym(B ⊗ Q), acción de q^a, series y verificación del teorema principal."""

import dataclasses
from fractions import Fraction

import pytest

from core.exceptions import InputError, NotFano, NotInAPlus, NotNested, VerificationFailed
from modules.arc_model.services.model import (
    build_arc_model,
    q_action,
    self_embedding_codim,
    stratum_descriptor,
)
from modules.arc_model.services.series import cousin_series_check, floer_series
from modules.arc_model.services.verification import (
    arc_specialization,
    presentations_agree,
    verify_theorem_main,
)
from modules.lattice_core.services.semigroup import LatticeMap
from modules.poly_engine.services.polynomials import format_poly, make_ring
from tests.fixtures.fans import BETTI


class TestModel:
    def test_p2_classes(self, p2):
        model = build_arc_model(p2)
        assert model.r == 1
        assert [format_poly(z) for z in model.z_classes] == ["y1", "y1", "y1"]
        assert format_poly(model.mu((1,))) == "y1^3"

    def test_f1_classes(self, f1):
        model = build_arc_model(f1)
        assert [format_poly(z) for z in model.z_classes] == ["y1", "-y1 + y2", "y1", "y2"]
        assert format_poly(model.mu((1, 1))) == "y1^2*y2"

    def test_mu_degree(self, bundled):
        model = build_arc_model(bundled)
        for a in bundled.semigroup.hilbert_basis:
            monomials = list(model.mu(a).itermonoms())
            assert all(sum(m) == bundled.degree(a) for m in monomials)

    def test_mu_outside_a_plus(self, f1):
        with pytest.raises(NotInAPlus):
            build_arc_model(f1).mu((1, 0))

    def test_q_action(self, p2):
        model = build_arc_model(p2)
        alpha = model.ring.gens[0]
        assert format_poly(q_action(model, (2,), alpha)) == "y1^7"

    def test_q_action_composes(self, f1):
        model = build_arc_model(f1)
        alpha = model.ring.gens[1] + 1
        twice = q_action(model, (0, 1), q_action(model, (1, 1), alpha))
        assert twice == q_action(model, (1, 2), alpha)

    def test_q_action_foreign_ring(self, p2):
        model = build_arc_model(p2)
        other = make_ring(["w"]).gens[0]
        with pytest.raises(InputError):
            q_action(model, (1,), other)


class TestEmbeddings:
    def test_codim_p2(self, p2):
        assert self_embedding_codim(p2, (0,), (2,)) == 6

    def test_codim_f1(self, f1):
        assert self_embedding_codim(f1, (0, 1), (1, 2)) == 3

    def test_codim_is_additive(self, f1):
        a, b, c = (0, 0), (0, 1), (1, 3)
        assert self_embedding_codim(f1, a, c) == (
            self_embedding_codim(f1, a, b) + self_embedding_codim(f1, b, c)
        )

    def test_not_nested(self, p2):
        with pytest.raises(NotNested):
            self_embedding_codim(p2, (1,), (0,))

    def test_not_nested_f1(self, f1):
        with pytest.raises(NotNested):
            self_embedding_codim(f1, (0, 0), (1, 0))

    def test_wrong_length(self, p2):
        with pytest.raises(InputError):
            self_embedding_codim(p2, (0, 0), (1,))

    def test_stratum_p2(self, p2):
        stratum = stratum_descriptor(p2, (1,))
        assert stratum.codim == 3
        assert stratum.poincare == (1, 1, 1)
        assert stratum.poincare_text() == "1 + s + s^2"

    def test_stratum_p1xp1(self, p1xp1):
        stratum = stratum_descriptor(p1xp1, (1, 1), betti=BETTI["p1xp1"])
        assert stratum.codim == 4
        assert stratum.poincare_text("h") == "1 + 2*h + h^2"

    def test_stratum_outside(self, f1):
        with pytest.raises(NotInAPlus):
            stratum_descriptor(f1, (1, 0))


class TestCousinSeries:
    @pytest.mark.parametrize("name_fixture", ["p2", "p1xp1"])
    def test_holds(self, request, name_fixture):
        report = cousin_series_check(request.getfixturevalue(name_fixture), 6)
        assert report.holds
        assert report.first_mismatch is None
        assert report.lhs == report.rhs

    def test_projective_line(self):
        from tests.fixtures.fans import cox
        assert cousin_series_check(cox("p1"), 5).holds
        assert cousin_series_check(cox("p3"), 5).holds

    @pytest.mark.parametrize("name_fixture", ["f1", "f2"])
    def test_hirzebruch_mismatch(self, request, name_fixture):
        report = cousin_series_check(request.getfixturevalue(name_fixture), 4)
        assert not report.holds
        assert report.first_mismatch == 2
        assert report.lhs[2] == 3
        assert report.rhs[2] == 2

    def test_report_contents(self, f1):
        report = cousin_series_check(f1, 6)
        assert report.semigroup_series == (1, 0, 1, 1, 1, 1, 2)
        assert report.h_polynomial == (1, 2, 1)
        assert report.primitive_relations == (((0, 2), {1: 1}), ((1, 3), {}))

    def test_cutoff_zero(self, bundled):
        report = cousin_series_check(bundled, 0)
        assert report.lhs == report.rhs == (1,)


class TestFloerSeries:
    def test_p2(self, p2):
        report = floer_series(p2, 2)
        assert report.rank == 3
        assert report.shifts == (6,)
        assert report.period == 6
        assert report.graded_ranks == (1, 0, 1, 0, 1)
        assert report.matches_quantum

    def test_p1(self):
        from tests.fixtures.fans import cox
        report = floer_series(cox("p1"), 1)
        assert report.rank == 2
        assert report.shifts == (4,)
        assert report.graded_ranks == (1, 0, 1)

    def test_p1xp1(self, p1xp1):
        report = floer_series(p1xp1, 3)
        assert report.rank == 4
        assert report.shifts == (4, 4)
        assert report.graded_ranks is None
        assert report.quantum_rank == 4

    def test_f2_requires_flag(self, f2):
        with pytest.raises(NotFano):
            floer_series(f2, 2)


class TestArcSpecialization:
    def test_p2(self, p2):
        specialization = arc_specialization(build_arc_model(p2), (Fraction(2),))
        assert [format_poly(g) for g in specialization.basis] == ["y1^3 - 2"]
        assert specialization.dimension == 3

    def test_f1_dimension(self, f1):
        specialization = arc_specialization(build_arc_model(f1), (Fraction(3), Fraction(-1, 2)))
        assert specialization.dimension == 4

    @pytest.mark.parametrize("q_spec", [(Fraction(1),), (Fraction(-5, 3),)])
    def test_presentations_agree_p2(self, p2, q_spec):
        assert presentations_agree(p2, q_spec)

    def test_presentations_agree_f1(self, f1):
        assert presentations_agree(f1, (Fraction(2), Fraction(7, 3)))


class TestVerification:
    def test_fano_fans_pass(self, fano):
        report = verify_theorem_main(fano, trials=2, seed=11)
        assert report.passed
        assert report.well_defined and report.surjective and report.rank_equal
        assert report.betti_total == sum(BETTI[fano.fan.name.lower()])
        assert all(trial.ok for trial in report.trials)

    def test_is_deterministic(self, f1):
        first = verify_theorem_main(f1, trials=2, seed=3).to_dict()
        second = verify_theorem_main(f1, trials=2, seed=3).to_dict()
        assert first == second

    def test_report_reflects_cousin_finding(self, f1):
        report = verify_theorem_main(f1, trials=1, seed=0)
        assert report.passed
        assert not report.cousin_series_holds

    def test_to_dict(self, p2):
        data = verify_theorem_main(p2, trials=1, seed=0).to_dict()
        assert data["passed"] is True
        assert data["trials"][0]["presentations_agree"] is True
        assert data["trials"][0]["error"] is None

    def test_not_fano(self, f2):
        with pytest.raises(NotFano):
            verify_theorem_main(f2, trials=1, seed=0)

    def test_not_fano_with_flag_is_reported(self, f2):
        try:
            report = verify_theorem_main(f2, trials=1, seed=0, allow_non_fano=True)
        except VerificationFailed as e:
            report = e.details
        assert report.warnings

    def test_corrupted_beta_fails(self, p2):
        corrupted = dataclasses.replace(p2, beta=LatticeMap.from_basis([(1, 1, 2)], 3))
        with pytest.raises(VerificationFailed) as info:
            verify_theorem_main(corrupted, trials=1, seed=0)
        report = info.value.details
        assert not report.well_defined
        assert not report.rank_equal
        trial = report.trials[0]
        assert trial.quantum_dimension == 4
        assert trial.arc_dimension == 4
        assert not trial.ok
