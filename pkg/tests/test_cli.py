"""Command-line behavior: output formats, exit codes, report schema,
determinism under concurrency."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from trigsum import cli
from trigsum.cli import decimal_string, main, run_bench

F = Fraction


# --- eval ---------------------------------------------------------------------

def test_eval_basic_cos(capsys):
    assert main(["eval", "--family", "C", "--m", "2", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "9/8"


def test_eval_integer_prints_bare_in_human_mode(capsys):
    assert main(["eval", "--family", "quoniam", "--m", "2", "--n", "4"]) == 0
    assert capsys.readouterr().out.strip() == "7"


def test_eval_cot(capsys):
    assert main(["eval", "--family", "cot", "--n", "3", "--k", "4"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_eval_barbero(capsys):
    assert main(["eval", "--family", "barbero", "--m", "12", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "3798310"


def test_eval_erratum_families_evaluable(capsys):
    assert main(["eval", "--family", "barbero-naive", "--m", "12", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "3780094"
    assert main(["eval", "--family", "byrne-smith-printed", "--n", "1", "--k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "10"


def test_eval_json_schema(capsys):
    assert main(["eval", "--family", "C", "--m", "2", "--n", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["family"] == "C"
    assert payload["value"] == {"num": 9, "den": 8}
    assert payload["params"]["m"] == 2 and payload["params"]["n"] == 3
    assert "decimal" not in payload


def test_eval_json_value_keeps_den_one(capsys):
    assert main(["eval", "--family", "quoniam", "--m", "2", "--n", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == {"num": 7, "den": 1}


def test_eval_digits(capsys):
    assert main(["eval", "--family", "C", "--m", "2", "--n", "3", "--digits", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["9/8", "1.1250"]
    assert main(
        ["eval", "--family", "C", "--m", "2", "--n", "3", "--digits", "2", "--json"]
    ) == 0
    assert json.loads(capsys.readouterr().out)["decimal"] == "1.12"


def test_eval_missing_parameter_is_usage_error(capsys):
    assert main(["eval", "--family", "C", "--m", "2"]) == 2
    assert "requires --n" in capsys.readouterr().err


def test_eval_invalid_parameter_is_usage_error(capsys):
    assert main(["eval", "--family", "scaled", "--m", "2", "--n", "3", "--q", "4"]) == 2


def test_eval_unknown_family_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "nope", "--m", "1", "--n", "1"])
    assert exc.value.code == 2


def test_decimal_string_half_to_even():
    assert decimal_string(F(9, 8), 6) == "1.125000"
    assert decimal_string(F(1, 2), 0) == "0"
    assert decimal_string(F(3, 2), 0) == "2"
    assert decimal_string(F(5, 2), 0) == "2"
    assert decimal_string(F(7, 2), 0) == "4"
    assert decimal_string(F(1, 8), 2) == "0.12"
    assert decimal_string(F(3, 8), 2) == "0.38"
    assert decimal_string(F(-9, 8), 3) == "-1.125"
    assert decimal_string(F(0), 2) == "0.00"
    assert decimal_string(F(2, 3), 5) == "0.66667"


# --- verify -------------------------------------------------------------------

def test_verify_degenerate_grid(capsys):
    assert main(["verify", "--family", "C", "--m-max", "0", "--n-max", "5"]) == 0
    out = capsys.readouterr().out
    lines = [line for line in out.splitlines() if "[ok]" in line]
    assert len(lines) == 5
    assert "total=5 mismatches=0" in out


def test_verify_report_schema(capsys):
    assert main(
        ["verify", "--family", "C,S", "--m-max", "2", "--n-max", "2", "--json"]
    ) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"cases", "summary"}
    assert set(report["summary"]) == {"total", "mismatches"}
    assert report["summary"]["total"] == 12
    assert report["summary"]["mismatches"] == 0
    for case in report["cases"]:
        assert set(case) == {
            "spec",
            "closed_form",
            "oracle",
            "match",
            "micros_closed",
            "micros_oracle",
        }
        assert case["match"] is True
        assert case["closed_form"] == case["oracle"]


def test_verify_order_is_deterministic_across_jobs(capsys):
    args = ["verify", "--family", "C,S,cot", "--m-max", "3", "--n-max", "3", "--json"]
    assert main(args + ["--jobs", "1"]) == 0
    sequential = json.loads(capsys.readouterr().out)
    assert main(args + ["--jobs", "3"]) == 0
    parallel = json.loads(capsys.readouterr().out)
    strip = lambda report: [
        {k: v for k, v in case.items() if not k.startswith("micros")}
        for case in report["cases"]
    ]
    assert strip(sequential) == strip(parallel)
    # sorted by family token, then parameters
    families = [case["spec"]["family"] for case in sequential["cases"]]
    assert families == sorted(families)


def test_verify_detects_injected_mismatch(capsys, monkeypatch):
    """A wrong closed-form value must flip the exit code to 1."""
    monkeypatch.setattr(cli, "_closed_value", lambda req: F(1, 7))
    assert main(["verify", "--family", "C", "--m-max", "1", "--n-max", "2", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["mismatches"] == report["summary"]["total"] == 4


def test_verify_unknown_family_is_usage_error(capsys):
    assert main(["verify", "--family", "trigonometry"]) == 2


def test_verify_errata_family_requires_flag(capsys):
    assert main(["verify", "--family", "barbero-naive"]) == 2


def test_verify_expect_known_errata_single(capsys):
    code = main(
        ["verify", "--family", "barbero-naive", "--expect-known-errata", "--json"]
    )
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["summary"]["total"] == 1
    assert report["summary"]["mismatches"] == 1  # the mismatch is the point
    case = report["cases"][0]
    assert case["closed_form"] == "3780094"
    assert case["oracle"] == "3798310"


def test_verify_expect_known_errata_all(capsys):
    code = main(["verify", "--family", ",".join(cli._ERRATA_FAMILIES),
                 "--expect-known-errata"])
    out = capsys.readouterr().out
    assert code == 0
    assert "note:" in out
    assert "18216" in out


def test_verify_out_file(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    assert main(
        ["verify", "--family", "C", "--m-max", "1", "--n-max", "1", "--out", str(out_json)]
    ) == 0
    capsys.readouterr()
    stored = json.loads(out_json.read_text())
    assert stored["summary"] == {"total": 2, "mismatches": 0}
    out_csv = tmp_path / "report.csv"
    assert main(
        ["verify", "--family", "C", "--m-max", "1", "--n-max", "1", "--out", str(out_csv)]
    ) == 0
    header = out_csv.read_text().splitlines()[0]
    assert header.startswith("family,params,closed_form,oracle,match")


# --- table --------------------------------------------------------------------

def test_table_sigma_csv(capsys):
    assert main(["table", "--kind", "sigma", "--n", "3", "--k-max", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,value"
    assert lines[1] == "0,0"
    assert lines[4] == "3,1/720"
    assert len(lines) == 8


def test_table_sigma_minus_json(capsys):
    assert main(
        ["table", "--kind", "sigma-minus", "--n", "3", "--k-max", "3", "--json"]
    ) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[3] == {"k": 3, "value": {"num": -1, "den": 720}}


def test_table_walks_path(capsys):
    assert main(["table", "--kind", "walks-path", "--n", "4", "--m-max", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m,count"
    assert lines[1:] == ["0,3", "1,4", "2,8", "3,16"]


def test_table_walks_bfile(capsys):
    assert main(
        ["table", "--kind", "walks-path", "--n", "4", "--m-max", "3", "--bfile"]
    ) == 0
    assert capsys.readouterr().out.splitlines() == ["0 3", "1 4", "2 8", "3 16"]


def test_table_walks_cycle_json(capsys):
    assert main(
        ["table", "--kind", "walks-cycle", "--n", "3", "--m-max", "2", "--json"]
    ) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [
        {"m": 0, "count": 3},
        {"m": 1, "count": 6},
        {"m": 2, "count": 18},
    ]


def test_table_cot_poly(capsys):
    assert main(["table", "--kind", "cot-poly", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "j,coefficient"
    assert lines[1] == "0,-26/45"
    assert lines[2] == "1,1"
    assert lines[3] == "2,-4/9"
    assert lines[4] == "3,0"
    assert lines[5] == "4,1/45"


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "sigma.csv"
    assert main(
        ["table", "--kind", "sigma", "--n", "3", "--k-max", "3", "--out", str(target)]
    ) == 0
    capsys.readouterr()
    assert target.read_text().splitlines()[0] == "k,value"


def test_table_usage_errors(capsys):
    assert main(["table", "--kind", "sigma"]) == 2  # missing --n
    assert main(["table", "--kind", "sigma", "--n", "3", "--bfile"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "--kind", "nope", "--n", "3"])
    assert exc.value.code == 2


# --- bench --------------------------------------------------------------------

def test_bench_reports_timing(capsys):
    assert main(
        ["bench", "--family", "C", "--m", "50", "--n", "7", "--repeat", "2"]
    ) == 0
    out = capsys.readouterr().out
    assert "closed" in out and "us" in out


def test_bench_with_oracle_asserts_equality(capsys):
    assert main(
        [
            "bench",
            "--family",
            "C",
            "--m",
            "30",
            "--n",
            "5",
            "--with-oracle",
            "--repeat",
            "2",
            "--json",
        ]
    ) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["equal"] is True
    assert result["micros_closed"] >= 0
    assert result["micros_oracle"] > 0


def test_bench_cot(capsys):
    assert main(
        ["bench", "--family", "cot", "--n", "5", "--k", "12", "--repeat", "1"]
    ) == 0
    assert "closed" in capsys.readouterr().out


def test_run_bench_machinery():
    result = run_bench("C", 20, 7, None, True, 3)
    assert result["equal"] is True
    assert set(result) == {"family", "params", "micros_closed", "micros_oracle", "equal"}


# --- module entry point ---------------------------------------------------------

def test_python_dash_m_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "trigsum", "eval", "--family", "C", "--m", "2", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "9/8"
