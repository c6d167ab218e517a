"""Normally torsion-free and nearly normally torsion-free checks (bounded)."""

from __future__ import annotations

import logging

from algebra.errors import BudgetExceeded, CrossCheckError, IdealError
from algebra.ideal import MonomialIdeal, localize, power, support
from algebra.monomial import PrimeSupport
from checkers.persistence import _bound, _require_proper, _require_squarefree
from checkers.verdicts import Counterexample, Property, PropertyVerdict
from decomposition.primes import PrimeModel, ass_witnesses, minimal_primes
from tools.budget import checkpoint
from tools.settings import get_settings

log = logging.getLogger(__name__)


def _extras(I: MonomialIdeal, K: int, mins: set[frozenset[int]]):
    """Yield (m, Ass(I^m) minus Min(I)) for m = 1..K."""
    method = get_settings().ass_method
    for m in range(1, K + 1):
        checkpoint()
        ass = {w.prime.vars for w in ass_witnesses(power(I, m), method)}
        yield m, sorted(ass - mins, key=lambda s: (len(s), sorted(s)))


def _models(I: MonomialIdeal, sets) -> list[PrimeModel]:
    return [PrimeModel.of(PrimeSupport(s), I.variable_names) for s in sets]


def normally_torsion_free(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """Ass(I^m) = Min(I) for m = 1..K."""
    _require_proper(I, "normally_torsion_free")
    _require_squarefree(I, "normally_torsion_free")
    K = _bound(K, "normally_torsion_free")
    verdict = dict(property=Property.ntf, ideal=I.render(), bound=K)
    mins = {p.vars for p in minimal_primes(I)}
    done = 0
    try:
        for m, extra in _extras(I, K, mins):
            if extra:
                primes = _models(I, extra)
                return PropertyVerdict(
                    holds=False,
                    holds_up_to=done,
                    counterexample=Counterexample(
                        k=m,
                        evidence=f"embedded prime {', '.join(p.label for p in primes)} in Ass(I^{m})",
                        primes=primes,
                    ),
                    **verdict,
                )
            done = m
    except BudgetExceeded as exc:
        exc.partial = PropertyVerdict(holds=False, holds_up_to=done, complete=False, **verdict)
        raise
    return PropertyVerdict(holds=True, holds_up_to=K, **verdict)


def nearly_ntf(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """Ass(I^m) = Min(I) up to a threshold k, then inside Min(I) + {p} for one fixed p."""
    _require_proper(I, "nearly_ntf")
    _require_squarefree(I, "nearly_ntf")
    K = _bound(K, "nearly_ntf")
    if K < 2:
        raise IdealError(f"nearly_ntf needs a bound K >= 2, got {K}")
    verdict = dict(property=Property.nntf, ideal=I.render(), bound=K)
    mins = {p.vars for p in minimal_primes(I)}
    extra_prime: frozenset[int] | None = None
    threshold = None
    done = 0
    try:
        for m, extra in _extras(I, K, mins):
            if m == 1 and extra:
                raise CrossCheckError(f"the squarefree ideal {I.render()} has an embedded prime")
            if extra and extra_prime is None:
                if len(extra) > 1:
                    primes = _models(I, extra)
                    return PropertyVerdict(
                        holds=False,
                        holds_up_to=done,
                        counterexample=Counterexample(
                            k=m,
                            evidence=f"{len(extra)} extra primes in Ass(I^{m}): {', '.join(p.label for p in primes)}",
                            primes=primes,
                        ),
                        **verdict,
                    )
                extra_prime = extra[0]
                threshold = m - 1
            elif extra and set(extra) != {extra_prime}:
                primes = _models(I, extra)
                return PropertyVerdict(
                    holds=False,
                    holds_up_to=done,
                    threshold=threshold,
                    extra_prime=_models(I, [extra_prime])[0],
                    counterexample=Counterexample(
                        k=m,
                        evidence=f"extra primes changed to {', '.join(p.label for p in primes)} in Ass(I^{m})",
                        primes=primes,
                    ),
                    **verdict,
                )
            done = m
    except BudgetExceeded as exc:
        exc.partial = PropertyVerdict(holds=False, holds_up_to=done, complete=False, **verdict)
        raise

    notes = []
    if extra_prime is None:
        notes.append(f"no embedded prime up to K={K}: normally torsion-free on the checked range")
    return PropertyVerdict(
        holds=True,
        holds_up_to=K,
        threshold=threshold,
        extra_prime=_models(I, [extra_prime])[0] if extra_prime is not None else None,
        notes=notes,
        **verdict,
    )


def nntf_by_localization(I: MonomialIdeal, K: int | None = None) -> PropertyVerdict:
    """Sufficient test: I(m minus x_i) normally torsion-free for every i gives nearly NTF.

    The localisations are only checked up to K, so the conclusion inherits that bound.
    When some localisation is not normally torsion-free the verdict is undecided
    (``holds`` is None): the test is sufficient only, so it refutes nothing.
    """
    _require_proper(I, "nntf_by_localization")
    _require_squarefree(I, "nntf_by_localization")
    K = _bound(K, "nntf_by_localization")
    verdict = dict(property=Property.nntf, ideal=I.render(), bound=K)
    everything = frozenset(range(I.ambient_dim))
    notes = ["localisation criterion: every I(m minus x_i) normally torsion-free up to K"]
    for i in sorted(support(I)):
        J = localize(I, everything - {i})
        if J.is_unit:
            notes.append(f"I({I.variable_names[i]}=1) is the unit ideal")
            continue
        sub = normally_torsion_free(J, K)
        if not sub.holds:
            label = I.variable_names[i]
            notes.append(f"I({label}=1) is not normally torsion-free: {sub.summary()}")
            notes.append("the localisation test does not apply, so it decides nothing")
            log.info("localisation at %s=1 is not NTF; the criterion does not apply", label)
            return PropertyVerdict(holds=None, holds_up_to=0, notes=notes, **verdict)
    return PropertyVerdict(holds=True, holds_up_to=K, notes=notes, **verdict)
