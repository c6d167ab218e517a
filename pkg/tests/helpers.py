"""Shared strategies and small builders for the test suite."""

from hypothesis import strategies as st

from algebra import MonomialIdeal, parse_ideal


def ideal(text: str) -> MonomialIdeal:
    return parse_ideal(text)


def small_ideals(n: int = 3, max_exp: int = 3, max_gens: int = 4):
    """Nonzero monomial ideals in n variables with small exponents."""
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.lists(exps, min_size=1, max_size=max_gens).map(lambda gs: MonomialIdeal.from_exponents(gs, n))


def proper_ideals(n: int = 3, max_exp: int = 3, max_gens: int = 4):
    return small_ideals(n, max_exp, max_gens).filter(lambda I: not I.is_unit)


def squarefree_ideals(n: int = 4, max_gens: int = 4):
    exps = st.tuples(*[st.integers(0, 1)] * n).filter(any)
    return st.lists(exps, min_size=1, max_size=max_gens).map(lambda gs: MonomialIdeal.from_exponents(gs, n))
