import json
import subprocess
import sys

import pytest

from wedgescatter import BoundaryKind, PotentialSpec, refine_series_zeros, scan_energies
from wedgescatter.cli import figure_outputs, main
from wedgescatter.serialize import (
    SCAN_HEADER,
    check_scan_header,
    read_scan_csv,
    read_zeros_json,
    write_scan_csv,
)
from wedgescatter.errors import DomainError


def test_scan_writes_expected_csv(tmp_path):
    out = tmp_path / "scan.csv"
    code = main(
        [
            "scan", "--potential", "x4", "--cutoff", "1", "--bc", "plane",
            "--emin", "0.5", "--emax", "0.6", "--de", "0.05", "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == SCAN_HEADER
    assert len(lines) == 4  # header + 3 grid energies


def test_scan_output_is_byte_identical_across_runs(tmp_path):
    args = [
        "scan", "--potential", "x4", "--cutoff", "1", "--bc", "wkb",
        "--emin", "0.5", "--emax", "0.7", "--de", "0.05",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_scan_csv_round_trip(tmp_path):
    spec = PotentialSpec(4, 1.0)
    series = scan_energies(spec, BoundaryKind.PLANE_WAVE, 0.5, 0.7, 0.05)
    path = tmp_path / "scan.csv"
    write_scan_csv(path, series)
    back = read_scan_csv(path, spec, BoundaryKind.PLANE_WAVE)
    assert back.energies == series.energies
    assert back.magnitudes == series.magnitudes
    assert back.points[0].incident == series.points[0].incident
    assert back.points[0].endpoint.value == series.points[0].endpoint.value


def test_header_mismatch_names_offending_column():
    with pytest.raises(DomainError, match=r"column 1 .*'magnitude'.*'mag'"):
        check_scan_header("E,mag,incident_re")


def test_zeros_from_scan_csv_match_in_process(tmp_path):
    spec = PotentialSpec(4, 1.0)
    series = scan_energies(spec, BoundaryKind.PLANE_WAVE, 0.5, 1.2, 0.01)
    expected = refine_series_zeros(series)

    scan_path = tmp_path / "scan.csv"
    zeros_path = tmp_path / "zeros.json"
    write_scan_csv(scan_path, series)
    code = main(
        [
            "zeros", "--potential", "x4", "--cutoff", "1", "--bc", "plane",
            "--emin", "0.5", "--emax", "1.2", "--de", "0.01",
            "--scan-csv", str(scan_path), "--oracle", "none", "--out", str(zeros_path),
        ]
    )
    assert code == 0
    loaded = read_zeros_json(zeros_path)
    assert len(loaded) == len(expected) == 1
    assert abs(loaded[0].energy - expected[0].energy) < 1e-6


def test_eigen_stdout_json(capsys):
    code = main(["eigen", "--potential", "x4", "--method", "hermitian", "--count", "3"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["method"] == "hermitian"
    assert payload["energies"] == pytest.approx([1.477150, 6.003386, 11.802434], abs=1e-4)


def test_eigen_numerical_failure_is_exit_one(capsys):
    code = main(
        ["eigen", "--potential", "x4", "--method", "contour", "--count", "3",
         "--emin", "0.5", "--emax", "4.0"]
    )
    assert code == 1
    record = json.loads(capsys.readouterr().err)
    assert record["error"] == "InsufficientRangeError"


def test_hermitian_oracle_rejects_non_quartic(capsys):
    code = main(["eigen", "--potential", "x6", "--method", "hermitian"])
    assert code == 1
    assert "quartic" in json.loads(capsys.readouterr().err)["message"]


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["scan", "--potential", "x9", "--cutoff", "1", "--bc", "plane",
              "--emin", "0.5", "--emax", "1.0", "--de", "0.1", "--out", "x.csv"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["scan", "--potential", "x4", "--cutoff", "1", "--bc", "plane",
              "--emin", "2.0", "--emax", "1.0", "--de", "0.1", "--out", "x.csv"])
    assert info.value.code == 2


def test_figure_preset_outputs(tmp_path):
    code = main(["figure", "--id", "5", "--out-dir", str(tmp_path)])
    assert code == 0
    paths = figure_outputs(5, tmp_path)
    assert paths["scan"].exists()
    assert paths["zeros"].exists()
    zeros = read_zeros_json(paths["zeros"])
    assert len(zeros) == 1
    assert zeros[0].energy == pytest.approx(1.4773, abs=2e-3)
    assert zeros[0].matched_eigenvalue == pytest.approx(1.477150, abs=1e-4)
    assert zeros[0].oracle == "contour-x4"


def test_figure_companion_names():
    paths = figure_outputs(7, __import__("pathlib").Path("out"))
    assert paths["companion_scan"].name == "fig07_scan_L5.csv"
    assert paths["companion_zeros"].name == "fig07_zeros_L5.json"


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "wedgescatter", "eigen", "--potential", "x4",
         "--method", "hermitian", "--count", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["energies"][0] == pytest.approx(1.477150, abs=1e-4)
