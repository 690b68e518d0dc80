"""CLI behavior: schemas, exit codes, determinism, error paths."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from pastroq.cli import RunConfig, admissible_draws, emit, run
from pastroq.report import Check, Report

PASTROQ = [sys.executable, "-m", "pastroq"]


def invoke(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        PASTROQ + list(argv), capture_output=True, text=True, timeout=120
    )


def test_table_json_schema():
    report, extra, lines = run(RunConfig("table", n_max=2))
    assert report.exit_code == 0
    payload = json.loads(emit(report, extra, lines, "json"))
    assert payload["checks"] == []
    assert payload["params"] == {"q": "1/2", "a": "3", "b": "1/5", "n_max": "2"}
    assert payload["pastro"][0] == {"degree": 0, "coefficients": {"0": "1"}}
    assert payload["pastro"][1] == {
        "degree": 1,
        "coefficients": {"0": "-7/12", "1": "1"},
    }
    assert payload["partners"][1]["coefficients"] == {"-1": "1", "0": "-18/13"}
    assert payload["alpha"][0] == "7/12"
    assert payload["beta"][0] == "18/13"
    assert payload["h"][0] == "1"
    assert payload["h"][1] == "5/26"


def test_table_text_lists_polynomials():
    report, extra, lines = run(RunConfig("table", n_max=1))
    text = emit(report, extra, lines, "text")
    assert "P_0 = 1" in text
    assert "P_1 = " in text
    assert "R_1 = " in text
    assert "alpha_0 = 7/12" in text


def test_verify_default_point_all_pass():
    report, _, _ = run(RunConfig("verify", n_max=4))
    assert report.exit_code == 0
    assert report.counts()["PASS"] == len(report.checks) > 0


def test_biorth_single_point_gram():
    report, extra, _ = run(RunConfig("biorth", N=1))
    assert report.exit_code == 0
    assert extra["gram"] == [["1"]]
    assert extra["weights"] == ["1"]


def test_biorth_frozen_two_point_gram():
    report, extra, _ = run(RunConfig("biorth", N=2))
    assert report.exit_code == 0
    assert extra["gram"] == [["1", "0"], ["0", "5/32"]]
    assert extra["grid"] == ["1/2", "1/4"]
    assert extra["weights"] == ["5/4", "-1/4"]


def test_algebra_constants_surface():
    report, extra, _ = run(RunConfig("algebra", mu=Fraction(0)))
    assert report.exit_code == 0
    assert extra["alpha1"] == "1/60"
    assert extra["alpha2"] == "-11/45"
    assert extra["gamma1"] == "1"
    assert extra["degenerate_pencil"] is True
    assert extra["presentation"] == {
        "beta1": "0",
        "beta2": "1",
        "delta1": "0",
        "delta2": "1",
    }


def test_verify_rejects_unit_q():
    report, _, _ = run(RunConfig("verify", q=Fraction(1)))
    assert report.exit_code == 2
    assert report.checks[0].status == "ERROR"


def test_verify_flags_resonant_b():
    # b = q^-2 makes (1 - b q^2) vanish inside the covered range
    report, _, _ = run(RunConfig("verify", b=Fraction(4), n_max=4))
    assert report.exit_code == 2
    assert "b" in (report.checks[0].witness or "")


def test_sweep_is_seeded_and_skips_bad_draws():
    report, extra, _ = run(RunConfig("sweep", seed=3, draws=2, n_max=2))
    assert extra == {"draws_requested": 2, "draws_run": 2}
    statuses = {check.status for check in report.checks}
    assert statuses <= {"PASS", "SKIP"}
    assert report.exit_code == 0
    labels = {
        check.params["draw"] for check in report.checks if check.status == "PASS"
    }
    assert len(labels) == 2


def test_admissible_draws_deterministic():
    first = admissible_draws(seed=7, count=4, n_max=3)
    second = admissible_draws(seed=7, count=4, n_max=3)
    assert first == second
    assert len(first) == 4
    assert len(set(first)) == 4


def test_unknown_command_raises():
    with pytest.raises(ValueError):
        run(RunConfig("frobnicate"))


def test_empty_report_rendering():
    assert Report([]).render_json() == '{"checks":[]}'
    assert Report([]).render_text() == "checks: 0"


def test_report_exit_codes():
    failing = Report([Check(name="x", identity="y", status="FAIL", witness="w")])
    assert failing.exit_code == 1
    erroring = Report(
        [
            Check(name="x", identity="y", status="FAIL", witness="w"),
            Check(name="z", identity="y", status="ERROR", witness="w"),
        ]
    )
    assert erroring.exit_code == 2
    skipped = Report([Check(name="x", identity="y", status="SKIP", witness="w")])
    assert skipped.exit_code == 0


def test_subprocess_verify_passes():
    result = invoke("verify", "--nmax", "3")
    assert result.returncode == 0
    assert "FAIL" not in result.stdout
    summary = result.stdout.rstrip().splitlines()[-1]
    assert summary.startswith("checks: ") and summary.endswith("PASS)")


def test_subprocess_exit_code_on_bad_parameters():
    result = invoke("verify", "--q", "1")
    assert result.returncode == 2
    assert "ERROR" in result.stdout


def test_subprocess_rejects_float_literals():
    result = invoke("verify", "--b", "0.5")
    assert result.returncode == 2
    assert "rational" in result.stderr


def test_subprocess_rejects_missing_command():
    result = invoke()
    assert result.returncode == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--nmax", "3", "--format", "json"],
        ["verify", "--nmax", "3", "--format", "text"],
        ["table", "--nmax", "4", "--format", "json"],
        ["biorth", "--N", "3", "--format", "json"],
        ["algebra", "--format", "json"],
        ["sweep", "--seed", "5", "--draws", "2", "--nmax", "2", "--format", "json"],
    ],
)
def test_subprocess_output_is_byte_identical(argv):
    first = invoke(*argv)
    second = invoke(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout


def test_json_output_is_parseable_and_sorted():
    result = invoke("verify", "--nmax", "2", "--format", "json")
    payload = json.loads(result.stdout)
    names = [check["name"] for check in payload["checks"]]
    assert "gevp" in names
    keys = list(payload)
    assert keys == sorted(keys)
