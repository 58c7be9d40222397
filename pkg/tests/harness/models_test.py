"""
Tests for report and row models
"""

from algext.models.experiment_report import ExperimentReportModel
from algext.models.result_row import ResultRowModel


RAW_REPORT = {
    "version": 1,
    "kind": "weil-check",
    "criterion": 13,
    "wall_clock": 0.25,
    "rows": [
        {"label": "d=3", "mode": "exact", "measured": 4.1, "bound": 20.0,
         "pass": True, "q": 101},
        {"label": "d=7", "mode": "exact", "measured": 9.0, "bound": 5.0,
         "pass": False},
    ],
}


def test_row_model():
    """Checks that a row exposes its common fields and keeps the rest as details
    """
    row = ResultRowModel(RAW_REPORT["rows"][0])
    assert row.label == "d=3"
    assert row.bound == 20.0
    assert row.passed
    assert row.details == {"q": 101}
    assert row.get("q") == 101
    assert row.get("missing", 7) == 7
    assert repr(row) == "ResultRowModel(label='d=3', mode='exact')"
    assert str(row).splitlines()[0] == "label: d=3"


def test_row_model_missing_fields():
    """Checks that absent fields read as None and an absent verdict fails
    """
    row = ResultRowModel({"label": "x"})
    assert row.measured is None
    assert not row.passed


def test_model_equality():
    """Checks that models compare by type and raw data
    """
    raw = RAW_REPORT["rows"][1]
    assert ResultRowModel(raw) == ResultRowModel(dict(raw))
    assert ResultRowModel(raw) != ResultRowModel(RAW_REPORT["rows"][0])
    assert ResultRowModel(raw) != raw


def test_report_rows_collection():
    """Checks the rows collection built from a report
    """
    report = ExperimentReportModel(RAW_REPORT)
    assert report.kind == "weil-check"
    assert len(report.rows) == 2
    assert report.rows[1].label == "d=7"
    assert [row.label for row in report.rows] == ["d=3", "d=7"]
    assert not report.rows.all_pass()
    assert [row.label for row in report.rows.failing()] == ["d=7"]
    assert report.rows.modes() == ["exact"]
    assert "wall_clock" not in report.deterministic_part()


def test_empty_rows_collection():
    """Checks that a report without rows yields an empty, falsy collection
    """
    report = ExperimentReportModel({"kind": "mod-m", "rows": None})
    assert len(report.rows) == 0
    assert not report.rows
    assert report.rows.all_pass()
