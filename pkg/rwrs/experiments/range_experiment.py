import logging
import math
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from .base_experiment import Experiment, Record, increasing, mean_and_stderr


class RangeExperiment(Experiment):
    """R_n ln(n) / n, which converges to pi A."""
    kind = ExperimentKind.RANGE

    def trial(self, n: int, trial_index: int) -> Record:
        field = self.simulate_path(n, trial_index).local_time
        return {"ratio": field.range_size * math.log(n) / n}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = mean_and_stderr([r["ratio"] for r in records])
        target = math.pi * self.walk.A
        logging.info(f"range n={n}: R_n ln n / n = {estimate:.6g} +/- {stderr:.3g}, target {target:.6g}")
        return self.make_row(n, estimate, stderr, target, "pi A")

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        if not increasing([row.estimate for row in rows]):
            return ["range: mean R_n ln n / n is not increasing over n"]
        return []
