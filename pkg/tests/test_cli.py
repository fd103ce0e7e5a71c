import io
import json
import math

import pytest

from tetraneg.cli import main
from tetraneg.csvio import CSV_COLUMNS, read_csv_rows, reemit_csv


def run(args):
    return main(args)


def test_gs_table_csv(tmp_path, capsys):
    out = tmp_path / "table.csv"
    assert run(["gs-table", "--out", str(out)]) == 0
    header, rows = read_csv_rows(io.StringIO(out.read_text()))
    assert header[:4] == ["regime", "states", "J1_over_J", "h_over_J"]
    assert len(rows) == 12  # four phases per regime
    dev_cols = [i for i, name in enumerate(header) if name.startswith("dev_")]
    worst = max(float(row[i]) for row in rows for i in dev_cols)
    assert worst < 1e-9


def test_gs_table_json(capsys):
    assert run(["gs-table", "--regime", "below", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 4
    row = payload[0]
    assert row["states"] == "0,1/2,1/2"
    cell = row["columns"]["mu1|S1S2"]
    assert cell["computed"] == pytest.approx((math.sqrt(97) - 1) / 18, abs=1e-9)


def test_scan_field_csv_roundtrip(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code = run(["scan-field", "--grid", "5x6", "--range", "j1_over_j=0:2",
                "--range", "h_over_j=0:6", "--out", str(out)])
    assert code == 0
    assert "30 nodes" in capsys.readouterr().err
    text = out.read_text()
    header, rows = read_csv_rows(io.StringIO(text))
    assert tuple(header) == CSV_COLUMNS
    assert len(rows) == 30
    assert reemit_csv(header, rows) == text  # byte-identical round trip
    # row-major order: first axis outer
    assert [r[0] for r in rows[:6]] == ["0"] * 6


def test_scan_field_contains_phase_label(tmp_path):
    out = tmp_path / "scan.csv"
    run(["scan-field", "--grid", "5x61", "--range", "j1_over_j=0.2:1.0",
         "--range", "h_over_j=0:6", "--out", str(out)])
    header, rows = read_csv_rows(io.StringIO(out.read_text()))
    node = [r for r in rows if r[0] == "0.4" and r[1] == "0.1"]
    assert node and node[0][3] == "0,1/2,1/2"


def test_scan_observables_none_gives_header_only(tmp_path):
    out = tmp_path / "empty.csv"
    assert run(["scan-field", "--grid", "3x3", "--observables", "none",
                "--out", str(out)]) == 0
    assert out.read_text() == ",".join(CSV_COLUMNS) + "\n"


def test_scan_thermal(tmp_path):
    out = tmp_path / "thermal.csv"
    code = run(["scan-thermal", "--j1-over-j", "0.5", "--grid", "3x4",
                "--range", "kt_over_j=0.1:0.5", "--range", "h_over_j=0:1",
                "--out", str(out)])
    assert code == 0
    header, rows = read_csv_rows(io.StringIO(out.read_text()))
    assert len(rows) == 12
    assert all(r[0] == "0.5" for r in rows)


def test_bad_grid_exits_1():
    assert run(["scan-field", "--grid", "banana"]) == 1
    assert run(["scan-field", "--grid", "1x5"]) == 1
    assert run(["scan-field", "--grid", "3x3", "--range", "h_over_j=zz"]) == 1


def test_missing_required_flag_exits_1(capsys):
    assert run(["scan-thermal", "--grid", "3x3"]) == 1
    capsys.readouterr()


def test_unwritable_output_exits_2(tmp_path):
    target = tmp_path / "missing-dir" / "x.csv"
    assert run(["scan-field", "--grid", "3x3", "--out", str(target)]) == 2


def test_phase_diagram_json(tmp_path):
    out = tmp_path / "phases.json"
    assert run(["phase-diagram", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    sloped = [s for s in payload["segments"] if s["kind"] == "sloped"]
    saturation = [s for s in sloped if s["slope"] == 3.0 and s["intercept"] == 0.0]
    assert saturation and saturation[0]["upper_phase"] == ["3,3/2,3/2"]
    vertical = [s for s in payload["segments"] if s["kind"] == "vertical"]
    assert len(vertical) == 1
    assert vertical[0]["j1"] == pytest.approx(1.0)
    assert vertical[0]["h_range"] == pytest.approx([0.0, 3.0])


def test_verify_appendix(tmp_path):
    out1, out2 = tmp_path / "r1.txt", tmp_path / "r2.txt"
    assert run(["verify-appendix", "--draws", "5", "--seed", "7", "--out", str(out1)]) == 0
    assert run(["verify-appendix", "--draws", "5", "--seed", "7", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    assert "result: PASS" in text
    assert "suspected-typo checks:" in text
