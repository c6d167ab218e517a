from decomposition.irreducible import IrreducibleComponent, irreducible_decomposition, reconstruct
from decomposition.primes import (
    AssProfile,
    AssWitness,
    ass_witnesses,
    associated_primes,
    depth_zero,
    minimal_primes,
    symbolic_power,
)

__all__ = [
    "AssProfile",
    "AssWitness",
    "IrreducibleComponent",
    "ass_witnesses",
    "associated_primes",
    "depth_zero",
    "irreducible_decomposition",
    "minimal_primes",
    "reconstruct",
    "symbolic_power",
]
