import logging
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from .base_experiment import Experiment, Record, mean_and_stderr


class MaxLocalTimeExperiment(Experiment):
    """N*_n / n^rho, which tends to 0 for every rho > 0."""
    kind = ExperimentKind.SUP

    def trial(self, n: int, trial_index: int) -> Record:
        field = self.simulate_path(n, trial_index).local_time
        return {"ratio": field.max_count / n**self.spec.rho}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = mean_and_stderr([r["ratio"] for r in records])
        logging.info(f"sup n={n}: N*_n / n^rho = {estimate:.6g} +/- {stderr:.3g}")
        return self.make_row(n, estimate, stderr, 0.0, "N*_n = o(n^rho)")

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        if len(rows) >= 2 and rows[-1].estimate >= rows[0].estimate:
            return [f"sup: N*_n / n^rho did not decrease between n={rows[0].n} and n={rows[-1].n}"]
        return []
