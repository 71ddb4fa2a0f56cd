import csv
import io
import json
import math

import pytest

from hurwitz_real_zeros import __version__
from hurwitz_real_zeros.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------- eval

def test_eval_exact_anchor(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "-1", "--a", "1")
    assert code == 0
    assert "-0.0833333333333" in out


def test_eval_zero_shift_identity(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "0", "--a", "0.3")
    assert code == 0
    assert "0.2" in out


def test_eval_pole_exit_code(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "1", "--a", "0.5")
    assert code == 2
    assert "pole" in err


def test_eval_bad_shift_exit_code(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "2", "--a", "1.5")
    assert code == 2
    assert "shift" in err


def test_eval_accuracy_failure_exit_code(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "0.5", "--a", "0.9",
                       "--tol", "1e-60")
    assert code == 3
    assert "accuracy" in err


def test_eval_json_embeds_config_and_version(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "-1", "--a", "1",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["config"]["target_abs_error"] == 1e-10
    assert doc["config"]["deterministic"] is True
    assert doc["value"] == pytest.approx(-1 / 12, abs=1e-10)


# ------------------------------------------------------------------ roots

def test_roots_even(capsys):
    code, out, _ = run(capsys, "roots", "--n", "2")
    assert code == 0
    assert "0.211324865405" in out
    assert "0.788675134595" in out


def test_roots_odd_exact(capsys):
    code, out, _ = run(capsys, "roots", "--n", "3")
    assert code == 0
    assert "0.5" in out
    assert "exact" in out


def test_roots_rejects_small_n(capsys):
    code, _, _ = run(capsys, "roots", "--n", "1")
    assert code == 2


# ---------------------------------------------------------------- predict

def test_predict_yes(capsys):
    code, out, _ = run(capsys, "predict", "--N", "0", "--a", "0.1")
    assert code == 0
    assert "yes" in out


def test_predict_no(capsys):
    code, out, _ = run(capsys, "predict", "--N", "0", "--a", "0.3")
    assert code == 0
    assert ": no" in out


def test_predict_boundary(capsys):
    code, out, _ = run(capsys, "predict", "--N", "3", "--a", "1")
    assert code == 0
    assert "boundary" in out


# ------------------------------------------------------------------- scan

def test_scan_finds_predicted_zero(capsys):
    code, out, _ = run(capsys, "scan", "--N", "1", "--a", "0.4")
    assert code == 0
    assert "zero at sigma = -1.64" in out


def test_scan_riemann_interval_empty(capsys):
    code, out, _ = run(capsys, "scan", "--N", "1", "--a", "1")
    assert code == 0
    assert "no zeros" in out


def test_scan_unit_interval_above_half(capsys):
    code, out, _ = run(capsys, "scan", "--N", "-1", "--a", "0.75")
    assert code == 0
    assert "no zeros" in out


def test_scan_curve_plot_xy(capsys):
    code, out, _ = run(capsys, "scan", "--N", "0", "--a", "0.3", "--curve",
                       "--grid", "32")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("#")
    assert len(lines) == 33
    for line in lines[1:]:
        x, y = line.split()
        float(x), float(y)


# ----------------------------------------------------------------- verify

VERIFY_ARGS = ["verify", "--nmin", "0", "--nmax", "1", "--astep", "0.3",
               "--grid", "64"]


def test_verify_exit_zero_and_counts(capsys):
    code, out, _ = run(capsys, *VERIFY_ARGS)
    assert code == 0
    assert "disagree=0" in out


def test_verify_csv_schema(capsys):
    code, out, _ = run(capsys, *VERIFY_ARGS, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "a", "B_left", "B_right", "predicted",
                       "zeros_found", "sigmas", "agrees", "note"]
    assert len(rows) == 1 + 2 * 3  # two N values, a in {0.3, 0.6, 0.9}
    for row in rows[1:]:
        assert "/" in row[2] and "/" in row[3]  # rational p/q serialization


def test_verify_deterministic_output(capsys):
    _, first, _ = run(capsys, *VERIFY_ARGS, "--format", "csv")
    _, second, _ = run(capsys, *VERIFY_ARGS, "--format", "csv")
    assert first == second


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, *VERIFY_ARGS, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["disagree"] == 0
    assert doc["config"]["grid_points"] == 64
    assert len(doc["cases"]) == 6


def test_verify_skips_boundary_a(capsys):
    code, out, _ = run(capsys, "verify", "--nmin", "0", "--nmax", "0",
                       "--astep", "0.5", "--grid", "64")
    assert code == 0
    assert "skip" in out


def test_verify_uniqueness_flag(capsys):
    code, out, _ = run(capsys, "verify", "--nmin", "4", "--nmax", "5",
                       "--astep", "0.25", "--grid", "128", "--uniqueness")
    assert code == 0
    assert "uniqueness M=2" in out
    assert "FAIL" not in out


def test_verify_rejects_bad_astep(capsys):
    code, _, _ = run(capsys, "verify", "--nmin", "0", "--nmax", "1",
                     "--astep", "1.5")
    assert code == 2


def test_verify_rejects_bad_range(capsys):
    code, _, _ = run(capsys, "verify", "--nmin", "-2", "--nmax", "1",
                     "--astep", "0.3")
    assert code == 2
