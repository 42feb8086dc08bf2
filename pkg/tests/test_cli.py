"""Command-line behaviour: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from askey_limits.cli import RunConfig, build_parser, main
from askey_limits.recurrence import DomainError


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "askey_limits.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(precision_bits=32)
    with pytest.raises(DomainError):
        RunConfig(n_max=-1)
    with pytest.raises(DomainError):
        RunConfig(tolerance=0.0)
    with pytest.raises(DomainError):
        RunConfig(output_format="xml")


def test_parser_requires_subcommand():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_coeffs_csv_hermite(capsys):
    assert main(["coeffs", "hermite", "--n-max", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n,B,C"
    assert out[1] == "0,0.0,"
    assert out[4] == "3,0.0,1.5"


def test_coeffs_json_schema(capsys):
    assert main(["coeffs", "jacobi-uniform:0,0", "--n-max", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["command"] == "coeffs"
    assert doc["rows"][0] == {"n": 0, "B": 0.0, "C": None}
    assert doc["rows"][2] == {"n": 2, "B": 0.0, "C": 8.0}


def test_coeffs_racah_uniform_point(capsys):
    assert main(["coeffs", "racah-uniform:0,0,0,0", "--n-max", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[2] == "1,0.0,1.0"


def test_domain_error_exit_code(capsys):
    assert main(["coeffs", "laguerre:alpha=-2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_point_spec_exit_code():
    code, _, err = run_cli("coeffs", "jacobi-uniform:1")
    assert code == 2 and "two inverse parameters" in err


def test_theorem_table_passes(capsys):
    assert main(["theorem-table", "--n-max", "6"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("row,dimension,target")
    assert len(out) == 17
    assert all(line.endswith("true") for line in out[1:])


def test_theorem_table_single_row_json(capsys):
    assert main(["theorem-table", "--row", "d=inf", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_passed"] is True
    assert len(doc["rows"]) == 1
    assert doc["rows"][0]["target"].startswith("hahn:")


def test_theorem_table_unknown_row(capsys):
    assert main(["theorem-table", "--row", "q=inf"]) == 2


def test_limit_scan_csv(capsys):
    assert main(["limit", "--preset", "laguerre-to-hermite", "--n-max", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "t,max_dev,max_dev_C,order"
    assert len(out) == 5


def test_oracle_compare_pass_and_fail(capsys):
    assert main(["oracle-compare", "jacobi:alpha=0.5,beta=2", "--tol", "1e-10"]) == 0
    capsys.readouterr()
    # an absurdly small tolerance turns the same comparison into exit 1
    assert main(["oracle-compare", "meixner:beta=1.5,c=0.4", "--tol", "1e-30"]) == 1


def test_oracle_compare_racah_refused(capsys):
    assert main(["oracle-compare", "racah:alpha=1,beta=2,delta=12,N=8"]) == 2


def test_byte_identical_reruns():
    for argv in (
        ["coeffs", "jacobi:alpha=0.5,beta=2", "--format", "json"],
        ["theorem-table", "--n-max", "5"],
        ["limit", "--preset", "jacobi-to-laguerre", "--format", "json"],
    ):
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first == second
        assert first[0] == 0
