from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

CSV_COLUMNS = ["experiment", "n", "trials", "estimate", "stderr", "target", "target_source", "seed"]

@dataclass
class ReportRow:
    experiment: str
    n: int
    trials: int
    estimate: float
    stderr: float
    target: float
    target_source: str
    seed: int
    passed: Optional[bool] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def csv_record(self) -> Dict[str, Any]:
        return {column: getattr(self, column) for column in CSV_COLUMNS}


@dataclass
class ExperimentReport:
    experiment: str
    rows: List[ReportRow] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def flagged(self) -> bool:
        return bool(self.flags)

    def row_for(self, n: int) -> ReportRow:
        return next(row for row in self.rows if row.n == n)

    def display(self):
        """Displays the report row-wise in a readable format."""
        print(f"\n=== {self.experiment} ===\n")
        print(f"seed: {self.metadata.get('seed')} | digest: {str(self.metadata.get('config_digest', ''))[:12]}")
        print("-" * 72)
        for row in self.rows:
            verdict = "" if row.passed is None else ("ok" if row.passed else "FLAG")
            print(
                f"  n={str(row.n).ljust(9)} estimate={row.estimate:<12.6g} +/- {row.stderr:<10.3g}"
                f" target={row.target:<10.6g} {verdict}"
            )
            print(f"  {'':11} ({row.target_source})")
        for flag in self.flags:
            print(f"  ! {flag}")
        print("\n")
