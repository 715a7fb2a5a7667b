#!/usr/bin/env python3
"""
Tests for the vvgamma command line.

Tests:
- Table commands in plain, JSON and CSV form
- Exit codes for usage errors, failures and strict-mode warnings
- Verification report JSON against schemas/report.schema.json
"""

import argparse
import json
import math
import os
import sys

import jsonschema
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from reporting import CheckReport, OracleReport
from vvgamma import EXIT_FAILED, EXIT_OK, EXIT_USAGE, EXIT_WARNINGS, _verdict, main, worst

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "schemas", "report.schema.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_triangle_csv(capsys):
    code, out = run(capsys, "triangle", "--n-max", "4", "--csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,m,value,recursion_ok"
    assert "4,2,15,True" in lines


def test_triangle_plain_has_banner(capsys):
    code, out = run(capsys, "triangle", "--n-max", "2")
    assert code == EXIT_OK
    assert out.startswith("=" * 60)


def test_gamma_rank2_json(capsys):
    code, out = run(capsys, "gamma", "rank2", "--l1", "2", "--l2", "0", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["k"] for row in rows] == [0, 1, 2]
    assert rows[0]["expr"] == rows[2]["expr"]


def test_gamma_rank2_invertibility(capsys):
    code, out = run(capsys, "gamma", "rank2", "--l1", "2", "--l2", "0", "--invertible-at", "3", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload["eigenvalues"]) == 3
    assert payload["invertibility"]["invertible"] is True
    assert payload["invertibility"]["polynomial_values"] == ["21/2", "27/2", "21/2"]


def test_gamma_rank2_not_dominant(capsys):
    code, _ = run(capsys, "gamma", "rank2", "--l1", "0", "--l2", "2")
    assert code == EXIT_USAGE


def test_gamma_alt_value(capsys):
    # -C_[1](-s) Gamma_2(s) = s Gamma_2(s); at s = 3 that is 9 pi / 2
    code, out = run(capsys, "gamma", "alt", "--m", "2", "--q", "1", "--at", "3", "--json")
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert row["value"] == pytest.approx(9 * math.pi / 2, rel=1e-12)


def test_gamma_table_at_pole(capsys):
    code, _ = run(capsys, "gamma", "table", "--r-max", "1", "--at", "1/2")
    assert code == EXIT_USAGE


def test_rep_monomial(capsys):
    code, out = run(capsys, "rep", "--r", "2", "--g", "1,2,3,4", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["entries"] for row in rows] == [["1", "2", "4"], ["6", "10", "16"], ["9", "12", "16"]]


def test_rep_bad_g(capsys):
    code, _ = run(capsys, "rep", "--r", "2", "--g", "1,2,3")
    assert code == EXIT_USAGE


def test_sturm_phantom(capsys):
    code, out = run(capsys, "sturm", "phantom", "--k-max", "5", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 5
    assert rows[0]["limit"] == "-8*pi^2"
    assert rows[0]["limit_c_rho"] == "-16/3*pi^2"
    assert all(row["limit"] == "0" for row in rows[1:])


def test_sturm_phantom_float(capsys):
    code, out = run(capsys, "sturm", "phantom", "--k-max", "2", "--json", "--float")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert rows[0]["limit"] == pytest.approx(-8 * math.pi ** 2, rel=1e-14)
    assert rows[1]["limit"] == 0.0


def test_sturm_phantom_k_max_too_small(capsys):
    code, _ = run(capsys, "sturm", "phantom", "--k-max", "1")
    assert code == EXIT_USAGE


def test_unknown_command(capsys):
    code, _ = run(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_json_and_csv_are_exclusive(capsys):
    code, _ = run(capsys, "triangle", "--json", "--csv")
    assert code == EXIT_USAGE


def test_verify_identities_report_schema(capsys):
    code, out = run(capsys, "verify", "identities", "--r-max", "3", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    with open(SCHEMA_PATH, encoding="utf-8") as f:
        jsonschema.Draft7Validator(json.load(f)).validate(payload)
    assert payload["command"] == "verify identities"
    assert payload["passed"] is True


def test_verify_maass(capsys):
    code, out = run(capsys, "verify", "maass", "--k-max", "1", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["reports"][0]["total"] == 6


def test_verify_maass_bad_step(capsys):
    code, _ = run(capsys, "verify", "maass", "--k-max", "1", "--step", "0.1")
    assert code == EXIT_USAGE


@pytest.mark.parametrize("codes,expected", [
    ([], EXIT_OK),
    ([EXIT_OK, EXIT_WARNINGS], EXIT_WARNINGS),
    ([EXIT_WARNINGS, EXIT_FAILED, EXIT_OK], EXIT_FAILED),
    ([EXIT_FAILED, EXIT_USAGE], EXIT_USAGE),
])
def test_worst(codes, expected):
    assert worst(codes) == expected


def _args(strict):
    return argparse.Namespace(json=True, csv=False, strict=strict)


def test_verdict_strict_warning(capsys):
    report = OracleReport("oracle")
    report.compare("x", 1.0, 1.0, 1e-9)
    report.warnings.append("order drift")
    assert _verdict([report], _args(strict=True), "verify oracle") == EXIT_WARNINGS
    assert _verdict([report], _args(strict=False), "verify oracle") == EXIT_OK
    capsys.readouterr()


def test_verdict_failure_outranks_warning(capsys):
    report = OracleReport("oracle")
    report.compare("x", 1.0, 2.0, 1e-9)
    report.warnings.append("order drift")
    failing = CheckReport("identities")
    failing.check("y", True)
    assert _verdict([failing, report], _args(strict=True), "verify all") == EXIT_FAILED
    capsys.readouterr()
