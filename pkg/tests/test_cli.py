"""End-to-end runs of the router: exit codes, JSON reports and text panels."""

import json

import pytest

from algebra import format_ideal, parse_ideal
from graphs import cycle, di_ideal, ni_ideal
from main import main


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    report = json.loads(capsys.readouterr().out)
    assert report["exit_code"] == code
    assert report["schema"] == 1
    return code, report


@pytest.fixture
def x2y2(tmp_path):
    path = tmp_path / "x2y2.txt"
    path.write_text("vars: x y\nx^2\ny^2\n")
    return str(path)


def test_no_arguments_prints_usage(capsys):
    assert main([]) == 2
    assert "Usage:" in capsys.readouterr().out


# -- graph ---------------------------------------------------------------------


def test_graph_ni_of_k23(capsys):
    code, report = run_json(capsys, "graph", "K2,3", "--out", "ni")
    assert code == 0
    assert len(parse_ideal(report["result"]).gens) == 5
    assert report["inputs"][0]["kind"] == "family"


def test_graph_di_of_c5_reports_cross_check(capsys):
    code, report = run_json(capsys, "graph", "C5", "--out", "di")
    assert code == 0
    assert len(parse_ideal(report["result"]).gens) == 5
    assert "cross_check" in report["details"]


def test_graph_domsets(capsys):
    code, report = run_json(capsys, "graph", "K2,2", "--out", "domsets")
    assert code == 0
    assert len(report["details"]["dominating_sets"]) == 6


def test_graph_partial_cover(capsys):
    code, report = run_json(capsys, "graph", "C5", "--out", "jt", "--t", "2")
    assert code == 0
    assert report["bounds"]["t"] == 2


def test_graph_wheel_condition_four(capsys):
    code, report = run_json(capsys, "graph", "wheel:1,5,[1,3,5]", "--out", "ni")
    assert code == 2
    assert report["details"]["violated_conditions"] == ["4"]
    assert "condition (4)" in report["error"]


def test_graph_valid_wheel(capsys):
    code, report = run_json(capsys, "graph", "wheel:1,5,[1,2,3]", "--out", "di")
    assert code == 0
    assert report["details"]["radial_number"] == 3
    assert report["details"]["rim_decomposition_holds"] is True


def test_graph_from_json_file(capsys, tmp_path):
    path = tmp_path / "c4.json"
    path.write_text(json.dumps(cycle(4).to_json()))
    code, report = run_json(capsys, "graph", str(path), "--out", "ni")
    assert code == 0
    assert parse_ideal(report["result"]) == ni_ideal(cycle(4))
    assert report["inputs"][0]["kind"] == "file"


def test_unknown_family_is_an_error(capsys):
    code, report = run_json(capsys, "graph", "P4", "--out", "ni")
    assert code == 2
    assert "unknown graph family" in report["error"]


# -- ideal ---------------------------------------------------------------------


def test_ideal_power(capsys):
    code, report = run_json(capsys, "ideal", "power", "--expr", "vars: x y; x; y", "--t", "3")
    assert code == 0
    assert len(parse_ideal(report["result"]).gens) == 4


def test_ideal_dual_of_ni_c4(capsys, tmp_path):
    path = tmp_path / "ni_c4.txt"
    path.write_text(format_ideal(ni_ideal(cycle(4))))
    code, report = run_json(capsys, "ideal", "dual", "--in", str(path))
    assert code == 0
    assert parse_ideal(report["result"]) == di_ideal(cycle(4))


def test_ideal_closure_adds_xy(capsys, x2y2):
    code, report = run_json(capsys, "ideal", "closure", "--in", x2y2)
    assert code == 0
    assert report["result"] == "vars: x y\nx^2\nx*y\ny^2\n"


def test_ideal_sum_needs_two_inputs(capsys, x2y2):
    code, report = run_json(capsys, "ideal", "sum", "--in", x2y2)
    assert code == 2
    assert "at least 2" in report["error"]


def test_ideal_colon_by_monomial(capsys, x2y2):
    code, report = run_json(capsys, "ideal", "colon", "--in", x2y2, "--expr", "vars: x y; x")
    assert code == 0
    assert report["result"] == "vars: x y\nx\ny^2\n"


def test_ideal_decompose(capsys):
    code, report = run_json(capsys, "ideal", "decompose", "--expr", "vars: x y; x^2; x*y")
    assert code == 0
    assert report["details"]["components"] == ["(x)", "(x^2, y)"]


def test_ideal_parse_error_has_position(capsys):
    code, report = run_json(capsys, "ideal", "dual", "--expr", "vars: x y; x*q")
    assert code == 2
    assert "line 2, column 4" in report["error"]


# -- check ---------------------------------------------------------------------


def test_check_normal_k22_text(capsys):
    assert main(["check", "normal", "K2,2-ni"]) == 0
    assert "normal (bound n-1=3 covered)" in capsys.readouterr().out


def test_check_normal_json_agrees_with_text(capsys):
    code, report = run_json(capsys, "check", "normal", "K2,2-ni")
    assert code == 0
    assert report["verdicts"][0]["normal"] is True
    assert report["bounds"]["normality"] == 3


def test_check_normal_refuted(capsys, x2y2):
    code, report = run_json(capsys, "check", "normal", x2y2)
    assert code == 1
    assert report["verdicts"][0]["failure_witness"] == "x*y"


def test_check_integrally_closed(capsys, x2y2):
    code, report = run_json(capsys, "check", "integrally-closed", x2y2)
    assert code == 1
    assert report["details"]["witness"] == "x*y"


def test_check_ass_k23(capsys):
    code, report = run_json(capsys, "check", "ass", "K2,3-ni", "--bound", "3")
    assert code == 0
    rows = report["verdicts"][0]["per_power"]
    assert [r["maximal_ideal_present"] for r in rows] == [False, False, True]


def test_check_ntf_k23_refuted_at_three(capsys):
    code, report = run_json(capsys, "check", "ntf", "K2,3-ni", "--bound", "3")
    assert code == 1
    assert report["verdicts"][0]["counterexample"]["k"] == 3


def test_check_strong_persistence(capsys):
    code, report = run_json(capsys, "check", "strong-persistence", "K2,2-ni", "--bound", "2")
    assert code == 0
    assert report["verdicts"][0]["holds"] is True


def test_check_ssp_needs_squarefree(capsys, x2y2):
    code, report = run_json(capsys, "check", "ssp", x2y2)
    assert code == 2
    assert "not squarefree" in report["error"]


def test_check_nntf_reports_localisation_test(capsys):
    code, report = run_json(capsys, "check", "nntf", "K2,2-di", "--bound", "3")
    assert code == 0
    assert len(report["verdicts"]) == 2


def test_check_criterion_outcomes(capsys, tmp_path):
    ok = tmp_path / "ok.json"
    ok.write_text(json.dumps({"kind": "I+xcH", "vars": ["x", "y"], "I": ["y"], "H": ["y"], "d": "x", "c": 2}))
    code, report = run_json(capsys, "check", "criterion", str(ok))
    assert code == 0
    assert report["verdicts"][0]["outcome"] == "verified"

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "I+xcH", "vars": ["x", "y"], "I": ["x*y"], "H": ["y"], "d": "x"}))
    code, report = run_json(capsys, "check", "criterion", str(bad))
    assert code == 2
    assert report["verdicts"][0]["outcome"] == "not-applicable"


def test_timeout_exits_with_partial_evidence(capsys):
    code, report = run_json(capsys, "check", "normal", "K2,3-ni", "--timeout-sec", "1e-9")
    assert code == 3
    assert report["outcome"] == "budget-exceeded"
    assert report["verdicts"][0]["complete"] is False


def test_report_file_matches_stdout(capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(["graph", "C5", "--out", "di", "--report", str(out)])
    assert code == 0
    saved = json.loads(out.read_text())
    assert saved["exit_code"] == 0
    assert saved["command"] == ["graph", "C5", "--out", "di", "--report", str(out)]
    assert "DI(C5)" in capsys.readouterr().out


def test_invalid_settings_are_rejected(capsys):
    assert main(["graph", "C5", "--timeout-sec", "0"]) == 2
    assert "bad settings" in capsys.readouterr().out


def test_unknown_subcommand_is_an_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["plot", "C5"])
    assert exc.value.code == 2


def test_decomposition_mismatch_is_a_cross_check_failure(capsys, monkeypatch):
    import commands.ideal_command as ideal_command

    monkeypatch.setattr(ideal_command, "reconstruct", lambda comps, I: parse_ideal("vars: x y\nx\n"))
    code, report = run_json(capsys, "ideal", "decompose", "--expr", "vars: x y; x^2; x*y")
    assert code == 1
    assert report["outcome"] == "cross-check-failed"
    assert "do not intersect back" in report["error"]


def test_ideal_relations_reports_depth_bounds(capsys):
    code, report = run_json(capsys, "ideal", "relations", "--expr", "vars: x y z; x*y; y*z; x*z")
    assert code == 0
    assert (report["details"]["r"], report["details"]["s"]) == (3, 1)
    assert report["details"]["depth_bounds"] == ["depth(R/I^1) <= 1", "depth(R/I^2) <= 0"]
    assert report["details"]["depth_zero_power"] == 2


def test_missing_graph_file_is_an_input_error(capsys, tmp_path):
    code, report = run_json(capsys, "graph", str(tmp_path / "nowhere.json"), "--out", "ni")
    assert code == 2
    assert "not found" in report["error"]
