import io
import json
from dataclasses import asdict
from typing import Any, Optional
import numpy as np
import pandas as pd
from rwrs.models import CSV_COLUMNS, ExperimentReport, OutputFormat


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


class ReportEmitter:
    """
    Writes an ExperimentReport as CSV or JSON.

    CSV starts with a '# config_digest=<sha256>' line followed by exactly the
    CSV_COLUMNS; JSON carries every row field plus details, flags and metadata.
    """
    def __init__(self, report: ExperimentReport):
        self.report = report

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.csv_record() for row in self.report.rows], columns=CSV_COLUMNS)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# config_digest={self.report.metadata.get('config_digest', '')}\n")
        self.to_frame().to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def to_json(self) -> str:
        payload = {
            "experiment": self.report.experiment,
            "columns": CSV_COLUMNS,
            "rows": [asdict(row) for row in self.report.rows],
            "flags": list(self.report.flags),
            "metadata": dict(self.report.metadata),
        }
        return json.dumps(payload, indent=2, sort_keys=True, default=_jsonable)

    def render(self, output_format: OutputFormat) -> str:
        return self.to_csv() if output_format == OutputFormat.CSV else self.to_json()

    def emit(self, output_format: OutputFormat, path: Optional[str] = None) -> str:
        """Write the rendered report to `path` (when given) and return it."""
        text = self.render(output_format)
        if path is not None:
            with open(path, "w", newline="") as f:
                f.write(text)
        return text
