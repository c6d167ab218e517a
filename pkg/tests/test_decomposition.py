"""Irreducible decomposition, associated and minimal primes, symbolic powers."""

from itertools import product

import pytest
from hypothesis import given, settings

from algebra import MonomialIdeal, PrimeSupport, colon, contains, power, prime_ideal, prime_support
from algebra.errors import NotSquarefreeError, UnitIdealError, ZeroIdealError
from decomposition import (
    associated_primes,
    ass_witnesses,
    depth_zero,
    irreducible_decomposition,
    minimal_primes,
    reconstruct,
    symbolic_power,
)
from decomposition.irreducible import staircase_corners
from helpers import ideal, proper_ideals, squarefree_ideals


def _rendered(I, method="staircase"):
    return [c.render(I.variable_names) for c in irreducible_decomposition(I, method)]


@pytest.mark.parametrize("method", ["staircase", "split"])
def test_known_decompositions(method):
    assert _rendered(ideal("vars: x y; x^2; x*y"), method) == ["(x)", "(x^2, y)"]
    assert _rendered(ideal("vars: x y; x*y"), method) == ["(x)", "(y)"]
    assert _rendered(ideal("vars: x y; x; y"), method) == ["(x, y)"]


def test_decomposition_rejects_trivial_ideals():
    with pytest.raises(ZeroIdealError):
        irreducible_decomposition(MonomialIdeal.zero(2))
    with pytest.raises(UnitIdealError):
        irreducible_decomposition(MonomialIdeal.unit(2))


def test_staircase_corners_of_artinian_ideal():
    # (x^2, xy, y^2): the standard monomials are 1, x, y
    assert set(staircase_corners(((2, 0), (1, 1), (0, 2)))) == {(1, 0), (0, 1)}


@pytest.mark.property_based
@given(proper_ideals(n=3, max_exp=3, max_gens=4))
@settings(max_examples=40, deadline=None)
def test_methods_agree_and_reconstruct(I):
    staircase = irreducible_decomposition(I, "staircase")
    split = irreducible_decomposition(I, "split")
    assert staircase == split
    assert reconstruct(staircase, I) == I


def test_associated_primes_with_embedded_component():
    I = ideal("vars: x y; x^2; x*y")
    assert associated_primes(I) == [PrimeSupport.of(0), PrimeSupport.of(0, 1)]
    assert minimal_primes(I) == [PrimeSupport.of(0)]
    assert depth_zero(I)


def test_witnesses_are_checked():
    I = ideal("vars: x y z; x*y; y*z; x*z")
    for w in ass_witnesses(power(I, 2)):
        assert colon(power(I, 2), w.witness) == prime_ideal(w.prime, 3)


@pytest.mark.property_based
@given(proper_ideals(n=3, max_exp=2, max_gens=4))
@settings(max_examples=30, deadline=None)
def test_ass_methods_agree(I):
    assert associated_primes(I, "localization") == associated_primes(I, "decomposition")
    mins = set(minimal_primes(I))
    ass = associated_primes(I)
    assert mins <= set(ass)
    assert all(any(m.vars <= p.vars for m in mins) for p in ass)


@pytest.mark.property_based
@given(squarefree_ideals(n=4, max_gens=4))
@settings(max_examples=30, deadline=None)
def test_squarefree_ideals_have_no_embedded_primes(I):
    assert associated_primes(I) == minimal_primes(I)
    assert symbolic_power(I, 1) == I


def test_symbolic_square_of_triangle():
    I = ideal("vars: x y z; x*y; y*z; x*z")
    S2 = symbolic_power(I, 2)
    assert contains(S2, (1, 1, 1))
    assert not contains(power(I, 2), (1, 1, 1))
    assert all(contains(S2, g) for g in power(I, 2).gens)


def test_symbolic_power_needs_squarefree():
    with pytest.raises(NotSquarefreeError):
        symbolic_power(ideal("vars: x y; x^2"), 2)


def test_depth_zero_needs_full_support():
    assert not depth_zero(ideal("vars: x y z; x*y"))
    assert depth_zero(ideal("vars: x y; x^2; x*y; y^2"))


@pytest.mark.property_based
@given(proper_ideals(n=3, max_exp=3, max_gens=4))
@settings(max_examples=40, deadline=None)
def test_ass_matches_a_scan_of_the_exponent_box(I):
    # every associated prime is (I : u) for some u below the generators' exponent maxima
    tops = [max(g[i] for g in I.gens) for i in range(I.ambient_dim)]
    scanned = set()
    for u in product(*(range(top + 1) for top in tops)):
        p = prime_support(colon(I, u))
        if p is not None:
            scanned.add(p)
    assert scanned == set(associated_primes(I, "localization"))
    assert scanned == set(associated_primes(I, "decomposition"))
