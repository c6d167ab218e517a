"""Random hypothesis-valid inputs for the normality transfer criteria.

Building blocks are monomial primes, principal ideals and products of
primes on disjoint variable sets (products equal intersections there, and
are normal). Variable sets are kept disjoint wherever a criterion asks
for coprimality, so structural hypotheses hold by construction; normality
of sums is still checked by ``verify_criterion``.
"""

from __future__ import annotations

import random
from typing import Sequence

from algebra.ideal import MonomialIdeal, product, scale, variables_ideal
from algebra.monomial import Monomial
from checkers.criteria import CriterionInputs, CriterionKind

MAX_VARS = 5


def _prime(rng: random.Random, vars_: Sequence[int], n: int) -> MonomialIdeal:
    k = rng.randint(1, len(vars_))
    return variables_ideal(rng.sample(list(vars_), k), n)


def _principal(rng: random.Random, vars_: Sequence[int], n: int, squarefree: bool) -> MonomialIdeal:
    exps = [0] * n
    for i in rng.sample(list(vars_), rng.randint(1, len(vars_))):
        exps[i] = 1 if squarefree else rng.randint(1, 3)
    return MonomialIdeal.from_exponents([exps], n)


def _disjoint_primes(rng: random.Random, vars_: Sequence[int], n: int) -> MonomialIdeal:
    pool = list(vars_)
    rng.shuffle(pool)
    if len(pool) < 2:
        return variables_ideal(pool, n)
    cut = rng.randint(1, len(pool) - 1)
    return product(variables_ideal(pool[:cut], n), variables_ideal(pool[cut:], n))


def random_normal_ideal(
    rng: random.Random, vars_: Sequence[int], n: int, squarefree: bool = False
) -> MonomialIdeal:
    family = rng.choice(("prime", "principal", "disjoint"))
    if family == "prime":
        return _prime(rng, vars_, n)
    if family == "principal":
        return _principal(rng, vars_, n, squarefree)
    return _disjoint_primes(rng, vars_, n)


def _monomial_on(rng: random.Random, vars_: Sequence[int], n: int) -> Monomial:
    exps = [0] * n
    for i in rng.sample(list(vars_), rng.randint(1, len(vars_))):
        exps[i] = rng.randint(1, 2)
    return Monomial(tuple(exps))


def random_instance(kind: CriterionKind | str, rng: random.Random) -> CriterionInputs:
    kind = CriterionKind(kind)
    if kind is CriterionKind.x_power:
        n = rng.randint(2, MAX_VARS)
        d = rng.randrange(n)
        rest = [i for i in range(n) if i != d]
        I = random_normal_ideal(rng, rest, n)
        H = I if rng.random() < 0.3 else random_normal_ideal(rng, rest, n)
        return CriterionInputs(I=I, H=H, d=d, c=rng.randint(1, 3))

    if kind is CriterionKind.monomial_multiple:
        n = rng.randint(2, MAX_VARS)
        split = rng.randint(1, n - 1)
        base, extra = list(range(split)), list(range(split, n))
        I = random_normal_ideal(rng, base, n)
        H = I if rng.random() < 0.3 else random_normal_ideal(rng, base, n)
        return CriterionInputs(I=I, H=H, h=_monomial_on(rng, extra, n))

    if kind is CriterionKind.coprime_product:
        n = rng.randint(2, MAX_VARS)
        split = rng.randint(1, n - 1)
        base, extra = list(range(split)), list(range(split, n))
        H = random_normal_ideal(rng, base, n)
        I = H if rng.random() < 0.4 else scale(H, _monomial_on(rng, base, n))
        # pairwise coprime generators on the remaining variables
        rng.shuffle(extra)
        cuts = sorted(rng.sample(range(1, len(extra)), rng.randint(0, len(extra) - 1))) if len(extra) > 1 else []
        blocks = [extra[a:b] for a, b in zip([0, *cuts], [*cuts, len(extra)])]
        J = MonomialIdeal.from_exponents(
            [tuple(rng.randint(1, 2) if i in block else 0 for i in range(n)) for block in blocks], n
        )
        return CriterionInputs(I=I, H=H, J=J)

    if kind is CriterionKind.pinched:
        n = rng.randint(2, MAX_VARS - 1)
        return CriterionInputs(I=random_normal_ideal(rng, range(n), n, squarefree=True), ell=rng.randint(1, 3))

    if kind is CriterionKind.cone:
        n = rng.randint(2, MAX_VARS - 1)
        m = rng.randint(1, MAX_VARS - n)
        return CriterionInputs(I=random_normal_ideal(rng, range(n), n, squarefree=True), m=m)

    n = rng.randint(3, MAX_VARS)
    return CriterionInputs(I=random_normal_ideal(rng, range(n), n, squarefree=True))
