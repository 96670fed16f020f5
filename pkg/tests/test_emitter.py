import json
import pytest
from rwrs.models import CSV_COLUMNS, ExperimentReport, OutputFormat, ReportRow
from rwrs.plans import ReportEmitter

HEADER = ",".join(CSV_COLUMNS)


def _row(n=1000, estimate=0.61):
    return ReportRow(
        experiment="range", n=n, trials=10, estimate=estimate, stderr=0.01, target=3.141592653589793,
        target_source="pi A", seed=7, passed=True, details={"note": "x"},
    )


def test_empty_report_has_header_only_body():
    report = ExperimentReport(experiment="range", metadata={"config_digest": "abc"})
    lines = ReportEmitter(report).to_csv().splitlines()
    assert lines == ["# config_digest=abc", HEADER]


def test_one_row_report_has_two_line_body():
    report = ExperimentReport(experiment="range", rows=[_row()], metadata={"config_digest": "abc"})
    lines = ReportEmitter(report).to_csv().splitlines()
    assert lines[0] == "# config_digest=abc"
    assert lines[1:] == [HEADER, "range,1000,10,0.61,0.01,3.141592653589793,pi A,7"]


def test_json_round_trips_rows_and_metadata():
    report = ExperimentReport(
        experiment="range", rows=[_row(), _row(10_000, 0.7)], flags=["range: flag"],
        metadata={"config_digest": "abc", "seed": 7},
    )
    payload = json.loads(ReportEmitter(report).to_json())
    assert payload["columns"] == CSV_COLUMNS
    assert payload["metadata"] == {"config_digest": "abc", "seed": 7}
    assert payload["flags"] == ["range: flag"]
    assert [row["n"] for row in payload["rows"]] == [1000, 10_000]
    first = payload["rows"][0]
    assert first["estimate"] == 0.61
    assert first["target_source"] == "pi A"
    assert first["passed"] is True
    assert first["details"] == {"note": "x"}


@pytest.mark.parametrize("output_format", [OutputFormat.CSV, OutputFormat.JSON])
def test_emit_writes_the_rendered_text(tmp_path, output_format):
    report = ExperimentReport(experiment="range", rows=[_row()], metadata={"config_digest": "abc"})
    target = tmp_path / f"report.{output_format.value}"
    text = ReportEmitter(report).emit(output_format, str(target))
    assert target.read_text() == text
    assert "abc" in text
