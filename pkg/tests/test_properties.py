"""Bounded persistence-type checks, NTF / nearly NTF and Ass profiles."""

import pytest
from hypothesis import given, settings

from algebra import MonomialIdeal, variables_ideal
from algebra.errors import BudgetExceeded, IdealError, NotSquarefreeError, ZeroIdealError
from checkers import (
    Property,
    ass_profile,
    depth_zero_onset,
    nearly_ntf,
    nntf_by_localization,
    normally_torsion_free,
    persistence,
    strong_persistence,
    symbolic_strong_persistence,
)
from graphs import complete_bipartite, cycle, di_ideal, ni_ideal
from helpers import ideal, proper_ideals
from tools.budget import deadline


def test_strong_persistence_of_ni_k22():
    verdict = strong_persistence(ni_ideal(complete_bipartite(2, 2)), 4)
    assert verdict.holds and verdict.holds_up_to == 4
    assert verdict.property is Property.strong_persistence


def test_strong_persistence_of_principal_ideal():
    assert strong_persistence(ideal("vars: x; x"), 4).holds


def test_strong_persistence_of_di_c5():
    assert strong_persistence(di_ideal(cycle(5)), 3).holds


def test_persistence_of_prime():
    assert persistence(variables_ideal([0, 1], 3), 4).holds


def test_symbolic_strong_persistence():
    assert symbolic_strong_persistence(di_ideal(cycle(5)), 3).holds
    verdict = symbolic_strong_persistence(ideal("vars: x y; x; y"), 3)
    assert verdict.holds
    assert any("symbolic" in note for note in verdict.notes)


def test_symbolic_strong_persistence_of_triangle_is_recorded():
    verdict = symbolic_strong_persistence(ideal("vars: x y z; x*y; y*z; x*z"), 2)
    assert verdict.bound == 2
    assert verdict.holds_up_to <= 2


def test_ntf_principal():
    assert normally_torsion_free(ideal("vars: x1 x2; x1*x2"), 4).holds


def test_ntf_fails_for_ni_k23_at_third_power():
    verdict = normally_torsion_free(ni_ideal(complete_bipartite(2, 3)), 3)
    assert not verdict.holds
    assert verdict.counterexample.k == 3
    assert verdict.holds_up_to == 2
    assert [0, 1, 2, 3, 4] in [p.vars for p in verdict.counterexample.primes]


def test_ass_profile_of_ni_k23():
    profile = ass_profile(ni_ideal(complete_bipartite(2, 3)), 3)
    present = [row.maximal_ideal_present for row in profile.per_power]
    assert present == [False, False, True]
    assert profile.depth_zero_onset == 3
    assert profile.is_ascending()
    assert depth_zero_onset(ni_ideal(complete_bipartite(2, 3)), 3) == 3


def test_nearly_ntf_of_di_k22():
    I = di_ideal(complete_bipartite(2, 2))
    verdict = nearly_ntf(I, 4)
    assert verdict.holds
    assert verdict.property is Property.nntf
    assert nntf_by_localization(I, 3).holds


def test_nearly_ntf_reports_no_extra_prime_for_ntf_ideal():
    verdict = nearly_ntf(ideal("vars: x y z; x*y"), 3)
    assert verdict.holds
    assert verdict.extra_prime is None and verdict.threshold is None


def test_argument_errors():
    with pytest.raises(ZeroIdealError):
        persistence(MonomialIdeal.zero(2), 2)
    with pytest.raises(NotSquarefreeError):
        symbolic_strong_persistence(ideal("vars: x y; x^2"), 2)
    with pytest.raises(NotSquarefreeError):
        normally_torsion_free(ideal("vars: x y; x^2*y"), 2)
    with pytest.raises(IdealError):
        nearly_ntf(ideal("vars: x y; x*y"), 1)


def test_expired_budget_returns_partial_verdicts():
    I = ni_ideal(complete_bipartite(2, 2))
    with pytest.raises(BudgetExceeded) as exc:
        with deadline(-1.0):
            strong_persistence(I, 4)
    assert exc.value.partial.complete is False
    assert exc.value.partial.holds_up_to == 0

    with pytest.raises(BudgetExceeded) as exc:
        with deadline(-1.0):
            ass_profile(I, 3)
    assert exc.value.partial.per_power == []
    assert not exc.value.partial.complete


def test_localisation_test_is_undecided_when_a_localisation_is_not_ntf():
    # w=1 leaves the triangle edge ideal, whose square has the maximal ideal embedded
    I = ideal("vars: w x y z; w*x*y; w*y*z; w*x*z")
    verdict = nntf_by_localization(I, 2)
    assert verdict.holds is None
    assert verdict.counterexample is None
    assert "undecided" in verdict.summary()
    assert "does not apply" in verdict.summary()


@pytest.mark.parametrize(
    "check",
    [strong_persistence, persistence, symbolic_strong_persistence, normally_torsion_free, nntf_by_localization, ass_profile, depth_zero_onset],
)
@pytest.mark.parametrize("K", [0, -1])
def test_bounds_below_one_are_rejected(check, K):
    with pytest.raises(IdealError, match="K >= 1"):
        check(ideal("vars: x y; x*y"), K)


def test_missing_bound_uses_configured_default():
    verdict = strong_persistence(ideal("vars: x y; x*y"))
    assert verdict.bound == verdict.holds_up_to >= 1


@pytest.mark.property_based
@given(proper_ideals(n=3, max_exp=2, max_gens=3))
@settings(max_examples=25, deadline=None)
def test_persistence_agrees_with_the_ass_profile(I):
    profile = ass_profile(I, 3)
    nested = all(profile.ass_at(k) <= profile.ass_at(k + 1) for k in (1, 2))
    verdict = persistence(I, 2)
    assert verdict.holds == nested
    if not nested:
        k = verdict.counterexample.k
        assert not profile.ass_at(k) <= profile.ass_at(k + 1)
