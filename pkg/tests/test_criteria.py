"""Normality transfer criteria on concrete and random instances."""

import json
import random

import pytest

from algebra import Monomial
from algebra.errors import IdealError, ParseError
from checkers import CriterionInputs, CriterionKind, inputs_from_json, read_criterion, verify_criterion
from checkers.instances import random_instance
from helpers import ideal


def test_x_power_degenerate_case():
    I = ideal("vars: x y; y")
    report = verify_criterion(CriterionKind.x_power, CriterionInputs(I=I, H=I, d=0, c=2))
    assert report.outcome == "verified"
    assert report.constructed == "(y)"
    assert report.applicable


def test_x_power_needs_coprime_variable():
    I = ideal("vars: x y; x*y")
    report = verify_criterion("I+xcH", CriterionInputs(I=I, H=I, d=0, c=1))
    assert report.outcome == "not-applicable"
    assert report.conclusion is None
    assert not report.applicable


def test_pinched_intersection():
    report = verify_criterion(CriterionKind.pinched, CriterionInputs(I=ideal("vars: x1 x2; x1*x2"), ell=2))
    assert report.outcome == "verified"
    assert report.constructed == "(x1*x2)"


def test_pinched_requires_squarefree():
    report = verify_criterion(CriterionKind.pinched, CriterionInputs(I=ideal("vars: x1 x2; x1^2")))
    assert report.outcome == "not-applicable"
    assert [h.name for h in report.hypotheses if not h.passed] == ["I squarefree"]


def test_monomial_multiple_rebuilds_ni_k22():
    # NI(K_{2,2}) = I + x1*H with I = x2*(x3*x4) and H = (x3*x4, x2*x3, x2*x4)
    names = "vars: x1 x2 x3 x4"
    I = ideal(f"{names}; x2*x3*x4")
    H = ideal(f"{names}; x3*x4; x2*x3; x2*x4")
    report = verify_criterion(
        CriterionKind.monomial_multiple, CriterionInputs(I=I, H=H, h=Monomial((1, 0, 0, 0)))
    )
    assert report.constructed == "(x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4)"
    assert report.outcome == "verified"


def test_missing_inputs_raise():
    with pytest.raises(IdealError):
        verify_criterion(CriterionKind.coprime_product, CriterionInputs(I=ideal("vars: x y; x")))


def test_last_pair_construction():
    report = verify_criterion(CriterionKind.last_pair, CriterionInputs(I=ideal("vars: x1 x2 x3; x1*x2; x3")))
    assert report.applicable
    assert report.constructed is not None


def test_inputs_from_json():
    kind, inputs = inputs_from_json(
        {"kind": "I+xcH", "vars": ["x", "y"], "I": ["y"], "H": ["y"], "d": "x", "c": 2}
    )
    assert kind is CriterionKind.x_power
    assert inputs.d == 0 and inputs.c == 2
    assert inputs.H == ideal("vars: x y; y")


def test_inputs_from_json_errors(tmp_path):
    with pytest.raises(IdealError):
        inputs_from_json({"kind": "nope", "vars": ["x"]})
    with pytest.raises(ParseError):
        inputs_from_json({"kind": "I+xcH", "vars": ["x", "y"], "I": ["y"], "H": ["y"], "d": "z"})
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ParseError):
        read_criterion(bad)


def test_read_criterion(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"kind": "cor", "vars": ["a", "b"], "I": ["a*b"], "m": 2}))
    kind, inputs = read_criterion(path)
    assert kind is CriterionKind.cone and inputs.m == 2


@pytest.mark.property_based
@pytest.mark.parametrize("kind", list(CriterionKind))
def test_random_instances_never_yield_counterexamples(kind):
    rng = random.Random(20240611 + len(kind.value))
    for _ in range(4):
        report = verify_criterion(kind, random_instance(kind, rng), power_cap=2)
        assert report.outcome != "counterexample", report.summary()
        if report.outcome == "verified":
            assert report.conclusion is not None and report.conclusion.failure_power is None
