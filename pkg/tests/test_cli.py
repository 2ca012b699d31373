"""CLI subcommands: text output, JSON envelope, exit codes, golden demo bytes."""

import io
import json
from fractions import Fraction
from pathlib import Path

from germkit import __version__
from germkit.algebra import Polynomial
from germkit.cli import run_cli
from germkit.series import TruncatedSeries, ts_mul

GOLDEN = Path(__file__).parent / "data" / "demo_counterexample.txt"

F = Fraction


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def poly_from_terms(n, terms):
    return Polynomial(n, {tuple(mono): Fraction(coeff) for mono, coeff in terms})


# -- pinned subcommand behavior ---------------------------------------------------


def test_analyze_counterexample_at_origin():
    code, out, err = run(
        "analyze", "--poly", "z3^2 - z1*z2^2", "--point", "0,0,0", "--order", "8"
    )
    assert code == 0 and err == ""
    assert "status: SingularIrreducible" in out
    assert "OddVariableOrder(variable = z1, order = 1)" in out


def test_scan_counterexample_is_unstable():
    code, out, err = run(
        "scan", "--poly", "z3^2 - z1*z2^2", "--point", "0,0,0",
        "--curve", "t,0,0", "--t", "1,1/2,1/4,1/8", "--order", "8",
    )
    assert code == 0 and err == ""
    assert "verdict: Unstable" in out
    assert out.count("SingularReducible") == 4


def test_resultant_prints_the_formatted_polynomial():
    code, out, err = run("resultant", "--f", "z2^2 - z1^3", "--g", "2*z2", "--var", "z2")
    assert code == 0 and err == ""
    assert out == "-4*z1^3\n"


def test_discriminant_subcommand():
    code, out, _ = run("discriminant", "--poly", "z2^2 + z1*z2 + z1", "--var", "z2")
    assert code == 0
    assert out == "-4*z1 + z1^2\n"


def test_prepare_subcommand_reports_unit_and_coefficients():
    code, out, _ = run("prepare", "--poly", "z3^2 - z1*z2^2", "--point", "1,0,0")
    assert code == 0
    assert "degree d = 2" in out
    assert "e_1 = 0" in out
    assert "unit = 1" in out
    assert "u*w agrees with f through total degree 8: yes" in out


def test_coprime_subcommand_reports_discreteness():
    code, out, _ = run(
        "coprime", "--g", "z3^2 - z1*z2^2", "--h", "2*z3", "--point", "0,0,0"
    )
    assert code == 0
    assert "resultant (remaining variables renumbered): -4*z1*z2^2" in out
    assert "germs coprime at the point: yes" in out
    assert "resultant zero set discrete near the point: no" in out


# -- golden demo -------------------------------------------------------------------


def test_demo_counterexample_matches_golden_bytes():
    code, out, err = run("demo", "counterexample")
    assert code == 0 and err == ""
    assert out == GOLDEN.read_text()


def test_demo_is_deterministic():
    assert run("demo", "counterexample") == run("demo", "counterexample")


# -- JSON envelope -------------------------------------------------------------------


def test_json_envelope_shape():
    code, out, _ = run(
        "analyze", "--poly", "z3^2 - z1*z2^2", "--point", "1,0,0", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["tool"] == "germkit"
    assert doc["version"] == __version__
    assert doc["command"] == "analyze"
    assert doc["input"] == {
        "poly": "z3^2 - z1*z2^2",
        "point": ["1", "0", "0"],
        "order": 8,
    }
    assert isinstance(doc["timing_ms"], (int, float))
    result = doc["result"]
    assert result["status"] == "SingularReducible"
    assert result["certificate"]["kind"] == "MonomialUnitSquare"


def test_json_factors_multiply_back_to_w():
    code, out, _ = run(
        "analyze", "--poly", "z3^2 - z1*z2^2", "--point", "1,0,0", "--json"
    )
    assert code == 0
    result = json.loads(out)["result"]
    factors = [poly_from_terms(3, terms) for terms in result["factors"]]
    assert len(factors) == 2
    product = ts_mul(TruncatedSeries(factors[0], 8), TruncatedSeries(factors[1], 8))
    shifted = Polynomial(3, {(0, 0, 2): 1, (1, 2, 0): -1}).shift((1, 0, 0))
    assert product == TruncatedSeries(shifted, 8)


def test_json_rationals_are_strings():
    code, out, _ = run(
        "scan", "--poly", "z3^2 - z1*z2^2", "--point", "0,0,0",
        "--curve", "t,0,0", "--t", "1/2", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    sample = doc["result"]["samples"][0]
    assert sample["t"] == "1/2"
    assert sample["point"] == ["1/2", "0", "0"]
    assert sample["on_locus"] is True
    assert sample["status"] == "SingularReducible"
    assert doc["result"]["verdict"] == "Unstable"
    assert doc["result"]["witness_t"] == "1/2"


def test_json_demo_round_trips():
    code, out, _ = run("demo", "counterexample", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["origin"]["status"] == "SingularIrreducible"
    assert doc["result"]["nearby"]["status"] == "SingularReducible"
    assert doc["result"]["nearby"]["factors_multiply_back"] is True
    assert doc["result"]["scan"]["verdict"] == "Unstable"


# -- exit codes ----------------------------------------------------------------------


def test_exit_code_2_on_parse_error():
    code, out, err = run("analyze", "--poly", "z0 + 1", "--point", "0")
    assert code == 2
    assert "offset 0" in err and out == ""


def test_exit_code_1_on_usage_error():
    code, _, err = run("analyze", "--poly", "z1^2")  # missing --point
    assert code == 1
    code, _, err = run("unknown-command")
    assert code == 1
    code, _, err = run("resultant", "--f", "z1", "--g", "z1", "--var", "z9")
    assert code == 1 and "out of range" in err
    code, _, err = run("analyze", "--poly", "z1^2", "--point", "0", "--order", "1")
    assert code == 1 and "at least 2" in err


def test_exit_code_0_on_undetermined():
    code, out, _ = run(
        "analyze", "--poly", "z1^3 + z2^3 + z3^3", "--point", "0,0,0"
    )
    assert code == 0
    assert "status: Undetermined" in out


def test_point_and_poly_dimensions_must_be_reconcilable():
    code, _, err = run("analyze", "--poly", "z3^2 - z1*z2^2", "--point", "0,0")
    assert code == 1 and "coordinates" in err  # domain mismatch, not syntax
    code, out, _ = run("analyze", "--poly", "z1^2", "--point", "0,0,0")
    assert code == 0  # lower-dimensional poly widens to the point's space


def test_order_flag_changes_truncation():
    code, out, _ = run(
        "analyze", "--poly", "z3^2 - z1*z2^2", "--point", "1,0,0", "--order", "4",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    factors = [poly_from_terms(3, terms) for terms in doc["result"]["factors"]]
    assert max(sum(m) for m, _ in factors[0].terms()) <= 4
