"""Monomial and ideal arithmetic: canonical forms, the closed operations, errors."""

from itertools import combinations_with_replacement
from itertools import product as product_of_ranges

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    alexander_dual,
    colon,
    colon_ideal,
    contains,
    embed,
    intersect,
    is_squarefree,
    localize,
    minimalize,
    power,
    prime_ideal,
    product,
    saturate_variable,
    scale,
    sum_ideals,
    support,
    variables_ideal,
)
from algebra.errors import DimensionMismatch, ExponentOverflow, IdealError, NotSquarefreeError
from algebra.monomial import MAX_EXPONENT
from helpers import ideal, small_ideals, squarefree_ideals


def test_minimalize_drops_multiples():
    I = minimalize([Monomial((2, 1)), Monomial((2, 2))], 2)
    assert I.gens == ((2, 1),)


def test_minimalize_empty_and_unit():
    assert minimalize([], 2).is_zero
    unit = minimalize([Monomial((1, 0)), Monomial((1, 0)), Monomial((0, 0))], 2)
    assert unit.is_unit
    assert unit.gens == ((0, 0),)


def test_generators_in_graded_lex_order():
    I = ideal("vars: x y; y^2; x*y; x^2; y^3")
    assert I.gens == ((2, 0), (1, 1), (0, 2))
    assert I.render() == "(x^2, x*y, y^2)"


def test_contains():
    I = ideal("vars: x y; x^2; x*y")
    assert contains(I, (2, 1))
    assert not contains(I, (0, 3))
    assert not contains(MonomialIdeal.zero(2), (0, 0))


def test_sum_product_power():
    x, y = ideal("vars: x y; x"), ideal("vars: x y; y")
    assert product(x, y) == ideal("vars: x y; x*y")
    assert power(sum_ideals(x, y), 2) == ideal("vars: x y; x^2; x*y; y^2")
    assert (x + y) ** 2 == power(x + y, 2)


def test_power_rejects_non_positive():
    with pytest.raises(IdealError):
        power(ideal("vars: x; x"), 0)


def test_intersect_and_colon():
    I = ideal("vars: x y; x^2; y")
    assert intersect(ideal("vars: x y; x"), ideal("vars: x y; y")) == ideal("vars: x y; x*y")
    assert colon(I, Monomial((1, 0))) == ideal("vars: x y; x; y")
    assert colon_ideal(I, ideal("vars: x y; x; y")) == ideal("vars: x y; x; y")


def test_alexander_dual_of_path():
    I = ideal("vars: x1 x2 x3; x1*x2; x2*x3")
    assert alexander_dual(I) == ideal("vars: x1 x2 x3; x2; x1*x3")


def test_alexander_dual_needs_squarefree():
    with pytest.raises(NotSquarefreeError) as exc:
        alexander_dual(ideal("vars: x y; x^2; y"))
    assert exc.value.generator == "x^2"


def test_support_and_squarefree():
    I = ideal("vars: a b c; a*c")
    assert support(I) == frozenset({0, 2})
    assert is_squarefree(I)
    assert not is_squarefree(ideal("vars: a b; a^2"))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sum_ideals(ideal("vars: x; x"), ideal("vars: x y; y"))


def test_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        Monomial((MAX_EXPONENT + 1, 0))
    big = MonomialIdeal.from_exponents([(MAX_EXPONENT // 2 + 1,)], 1)
    with pytest.raises(ExponentOverflow):
        power(big, 2)


def test_saturate_localize_embed():
    I = ideal("vars: x y z; x^2*y; z")
    assert saturate_variable(I, 0) == ideal("vars: x y z; y; z")
    assert localize(I, frozenset({0, 2})) == ideal("vars: x y z; x^2; z")
    J = embed(ideal("vars: a b; a*b"), 4, positions=[1, 3])
    assert J.gens == ((0, 1, 0, 1),)
    assert J.variable_names == ("x1", "a", "x3", "b")


def test_prime_ideal_from_support():
    assert prime_ideal(PrimeSupport.of(0, 2), 3) == variables_ideal([0, 2], 3)
    assert variables_ideal([], 2).is_zero


@pytest.mark.property_based
@given(small_ideals(), small_ideals())
@settings(max_examples=40, deadline=None)
def test_lattice_inclusions(I, J):
    S, P, M = sum_ideals(I, J), product(I, J), intersect(I, J)
    assert all(contains(S, g) for g in I.gens + J.gens)
    assert all(contains(M, g) for g in P.gens)
    assert all(contains(I, g) and contains(J, g) for g in M.gens)


@pytest.mark.property_based
@given(small_ideals(), st.tuples(*[st.integers(0, 2)] * 3))
@settings(max_examples=40, deadline=None)
def test_colon_undoes_scaling(I, u):
    assert colon(scale(I, u), u) == I


@pytest.mark.property_based
@given(small_ideals())
@settings(max_examples=40, deadline=None)
def test_generators_are_an_antichain(I):
    for a in I.gens:
        for b in I.gens:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))


@pytest.mark.property_based
@given(squarefree_ideals(n=6, max_gens=5))
@settings(max_examples=40, deadline=None)
def test_alexander_dual_is_an_involution(I):
    assert alexander_dual(alexander_dual(I)) == I


@pytest.mark.property_based
@given(small_ideals(), small_ideals(), small_ideals())
@settings(max_examples=40, deadline=None)
def test_lattice_operations_commute_and_associate(I, J, K):
    for op in (sum_ideals, product, intersect):
        assert op(I, J) == op(J, I)
        assert op(op(I, J), K) == op(I, op(J, K))


@pytest.mark.property_based
@given(small_ideals(max_exp=2, max_gens=3), st.integers(1, 3), st.tuples(*[st.integers(0, 6)] * 3))
@settings(max_examples=60, deadline=None)
def test_power_membership_matches_generator_products(I, k, u):
    expected = any(
        all(sum(col) <= x for col, x in zip(zip(*choice), u))
        for choice in combinations_with_replacement(I.gens, k)
    )
    assert contains(power(I, k), u) == expected


@pytest.mark.property_based
@given(small_ideals(), small_ideals())
@settings(max_examples=30, deadline=None)
def test_intersection_membership_over_a_box(I, J):
    M = intersect(I, J)
    for u in product_of_ranges(range(5), repeat=3):
        assert contains(M, u) == (contains(I, u) and contains(J, u))


@pytest.mark.property_based
@given(small_ideals(), small_ideals())
@settings(max_examples=40, deadline=None)
def test_colon_contains_the_ideal(I, J):
    Q = colon_ideal(I, J)
    assert all(contains(Q, g) for g in I.gens)
