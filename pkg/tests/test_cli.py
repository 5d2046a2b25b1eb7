import json

import pytest

from octoplane.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_table_json(capsys):
    code, doc = run_json(capsys, "table", "--level", "3")
    assert code == 0
    assert doc["level"] == 3
    assert doc["basis"][7] == "e7"
    assert doc["table"][1][2] == {"sign": 1, "index": 3}
    # each row hits every basis index exactly once
    for row in doc["table"]:
        assert sorted(cell["index"] for cell in row) == list(range(8))


def test_table_text(capsys):
    code, out = run(capsys, "table", "--level", "1")
    assert code == 0
    assert "-e0" in out


def test_table_too_large(capsys):
    assert main(["table", "--level", "7"]) == 1


def test_check_matches_expectation_both_ways(capsys):
    code, doc = run_json(capsys, "check", "--property", "alternative", "--level", "3", "--samples", "50")
    assert code == 0 and doc["verdict"] == "holds" and doc["match"] is True
    code, doc = run_json(capsys, "check", "--property", "alternative", "--level", "4", "--samples", "10")
    assert code == 0 and doc["verdict"] == "fails" and doc["match"] is True
    assert doc["seed"] == 0 and doc["expected"] == "fails"


def test_check_two_generated(capsys):
    code, doc = run_json(capsys, "check", "--property", "two-generated", "--level", "2", "--samples", "5")
    assert code == 0 and doc["verdict"] == "holds"


def test_zero_divisors(capsys):
    code, doc = run_json(capsys, "zero-divisors", "--level", "3")
    assert code == 0 and doc["count"] == 0
    code, doc = run_json(capsys, "zero-divisors", "--level", "4")
    assert code == 0 and doc["count"] > 0
    first_u, first_v = doc["pairs"][0]
    assert first_u["level"] == 4 and len(first_v["coords"]) == 16


def test_chart_roundtrip(capsys):
    for dim in ("1", "2", "4", "8"):
        code, doc = run_json(capsys, "chart-roundtrip", "--level", dim, "--samples", "25", "--seed", "3")
        assert code == 0
        assert doc["verdict"] == "pass"
        assert doc["max_error"] < 1e-9
        assert doc["seed"] == 3


def test_chart_roundtrip_bad_dimension(capsys):
    assert main(["chart-roundtrip", "--level", "3"]) == 1


def test_equiv_check(capsys):
    code, doc = run_json(capsys, "equiv-check", "--level", "8", "--samples", "20", "--seed", "1")
    assert code == 0 and doc["verdict"] == "pass"


def test_cohomology_json(capsys):
    code, doc = run_json(capsys, "cohomology", "--space", "OP2", "--coeffs", "Z")
    assert code == 0
    by_degree = {entry["degree"]: entry["group"] for entry in doc}
    assert by_degree[0] == {"rank": 1, "torsion": []}
    assert by_degree[8] == {"rank": 1, "torsion": []}
    assert by_degree[16] == {"rank": 1, "torsion": []}
    assert by_degree[5] == {"rank": 0, "torsion": []}


def test_cohomology_mod_coefficients(capsys):
    code, doc = run_json(capsys, "cohomology", "--space", "RP2", "--coeffs", "Zmod:2")
    assert code == 0
    assert [entry["group"]["torsion"] for entry in doc] == [[2], [2], [2]]


def test_cohomology_unknown_space(capsys):
    assert main(["cohomology", "--space", "OP4"]) == 1


def test_hopf_bidegree(capsys):
    code, doc = run_json(capsys, "hopf", "--mode", "bidegree", "--level", "3", "--samples", "50")
    assert code == 0
    assert doc["hopf_invariant"] == 1
    assert doc["bidegree"] == [1, 1]
    assert "proxy" in doc["method"]


def test_hopf_linking(capsys):
    code, doc = run_json(capsys, "hopf", "--mode", "linking", "--segments", "128", "--samples", "3", "--seed", "2")
    assert code == 0
    assert abs(doc["hopf_invariant"]) == 1
    assert "proxy" in doc["method"]
    assert doc["segments"] == 128


def test_audit_all(capsys):
    code, doc = run_json(capsys, "audit-all", "--samples", "30", "--seed", "11")
    assert code == 0
    assert doc["all_match"] is True
    assert doc["seed"] == 11
    assert len(doc["checks"]) == 30  # 6 properties x 5 levels
    division4 = [
        c for c in doc["checks"] if c["property"] == "division" and c["level"] == 4
    ]
    assert division4[0]["verdict"] == "fails" and division4[0]["match"] is True


def test_audit_all_deterministic(capsys):
    _, first = run(capsys, "audit-all", "--samples", "25", "--seed", "42", "--json")
    _, second = run(capsys, "audit-all", "--samples", "25", "--seed", "42", "--json")
    assert first == second


def test_sampling_commands_deterministic(capsys):
    for argv in (
        ["chart-roundtrip", "--level", "4", "--samples", "10", "--seed", "5", "--json"],
        ["check", "--property", "flexible", "--level", "4", "--samples", "15", "--seed", "5", "--json"],
        ["hopf", "--mode", "linking", "--segments", "128", "--samples", "2", "--seed", "5", "--json"],
    ):
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second, argv


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["not-a-command"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["check", "--property", "bogus"])
    assert err.value.code == 2
