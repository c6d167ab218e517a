from checkers.criteria import CriterionInputs, CriterionKind, inputs_from_json, read_criterion, verify_criterion
from checkers.persistence import (
    ass_profile,
    depth_zero_onset,
    persistence,
    strong_persistence,
    symbolic_strong_persistence,
)
from checkers.torsion import nearly_ntf, normally_torsion_free, nntf_by_localization
from checkers.verdicts import Counterexample, CriterionReport, HypothesisCheck, Property, PropertyVerdict

__all__ = [
    "Counterexample",
    "CriterionInputs",
    "CriterionKind",
    "CriterionReport",
    "HypothesisCheck",
    "Property",
    "PropertyVerdict",
    "ass_profile",
    "depth_zero_onset",
    "inputs_from_json",
    "nearly_ntf",
    "nntf_by_localization",
    "normally_torsion_free",
    "persistence",
    "read_criterion",
    "strong_persistence",
    "symbolic_strong_persistence",
    "verify_criterion",
]
