"""Exact monomial and monomial-ideal arithmetic."""

from algebra.ideal import (
    MonomialIdeal,
    alexander_dual,
    colon,
    colon_ideal,
    contains,
    embed,
    equals,
    intersect,
    intersect_all,
    is_squarefree,
    localize,
    minimalize,
    power,
    prime_ideal,
    prime_support,
    principal,
    product,
    saturate_variable,
    scale,
    sum_ideals,
    support,
    variables_ideal,
)
from algebra.monomial import Monomial, PrimeSupport
from algebra.textio import format_ideal, parse_ideal, read_ideal

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "PrimeSupport",
    "alexander_dual",
    "colon",
    "colon_ideal",
    "contains",
    "embed",
    "equals",
    "format_ideal",
    "intersect",
    "intersect_all",
    "is_squarefree",
    "localize",
    "minimalize",
    "parse_ideal",
    "power",
    "prime_ideal",
    "prime_support",
    "principal",
    "product",
    "read_ideal",
    "saturate_variable",
    "scale",
    "sum_ideals",
    "support",
    "variables_ideal",
]
