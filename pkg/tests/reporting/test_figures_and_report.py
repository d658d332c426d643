import math
import time

import pytest

from constants.enum import Classification, FigureId
from services.oracle.auditor import compare_to_oracle
from services.reporting import (
    emit_figure_datasets,
    figure_config,
    parse_audit_report,
    render_audit_report,
    run_sweep,
)
from services.shared.exceptions import PersistenceError


def _rows(path):
    lines = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


class TestFigureConfig:
    def test_fig1_is_cat_over_psi(self, tmp_path):
        config = figure_config(FigureId.FIG1, tmp_path, seed=0, tail=1e-12)
        assert config.scenario.value == "cat"
        assert config.sweep.key == "psi"
        assert config.sweep.count == 201
        assert config.out == tmp_path / "fig1.csv"

    def test_fig2_is_kondo_over_theta(self, tmp_path):
        config = figure_config("fig2", tmp_path, seed=0, tail=1e-12, points=11)
        assert config.scenario.value == "kondo"
        assert config.fixed["g1"] == config.fixed["g4"] == pytest.approx(math.pi / 2)
        assert config.out.name == "fig2.csv"


class TestEmitFigures:
    def test_fig2_dataset_and_report(self, tmp_path):
        paths = emit_figure_datasets([FigureId.FIG2], tmp_path, seed=0, points=5, workers=2)
        assert [p.name for p in paths] == ["fig2.csv", "audit_report.txt"]

        header, rows = _rows(paths[0])
        assert header == ["theta", "delta_published", "concurrence", "delta_oracle"]
        assert len(rows) == 5
        assert float(rows[0][2]) == pytest.approx(0.0)
        assert float(rows[2][2]) == pytest.approx(1.0)

        report = parse_audit_report(paths[1].read_text())
        assert report["kondo_closed.delta"]["classification"] == "DEVIATES"
        assert report["micro_macro_closed"]["classification"] == "CONFIRMED"
        assert report["kondo_concurrence"]["scenario"] == "kondo"
        assert len(report) == 11

    def test_fig1_dataset_is_finite_or_tokenized(self, tmp_path):
        config = figure_config(FigureId.FIG1, tmp_path, seed=0, tail=1e-12)
        started = time.perf_counter()
        path = run_sweep(config)
        assert time.perf_counter() - started < 10.0

        header, rows = _rows(path)
        assert header[0] == "psi"
        assert len(rows) >= 200
        tokens = 0
        for row in rows:
            for cell in row:
                if cell == "undefined":
                    tokens += 1
                else:
                    assert math.isfinite(float(cell))
        assert tokens >= 2


    def test_reruns_are_byte_identical(self, tmp_path):
        def emit(name, workers):
            paths = emit_figure_datasets(
                [FigureId.FIG1, FigureId.FIG2], tmp_path / name, seed=7, points=21, workers=workers
            )
            return [p.read_bytes() for p in paths]

        first = emit("a", 1)
        assert len(first) == 3
        assert first == emit("b", 1) == emit("c", 3)


class TestAuditReport:
    def test_parse_recovers_record_fields(self):
        record = compare_to_oracle("kondo_closed.locals", workers=1)
        text = render_audit_report([record], {"cat_tail": 1e-12}, seed=9)
        assert "# seed: 9" in text
        assert "# units: kondo_closed.locals=radians\n" in text
        block = parse_audit_report(text)["kondo_closed.locals"]
        assert block["classification"] == Classification.CONFIRMED.value
        assert block["max_abs_error"] == record.max_abs_error
        assert block["worst_point"] == record.worst_point
        assert block["evaluated_points"] == record.evaluated_points
        assert block["unit"] == "radians"

    def test_rejects_stray_lines(self):
        with pytest.raises(PersistenceError) as exc:
            parse_audit_report("# header\nclassification = \"CONFIRMED\"\n")
        assert exc.value.error_code == "BAD_REPORT_LINE"
