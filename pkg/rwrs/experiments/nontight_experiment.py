import logging
import math
from typing import List
import numpy as np
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.rwrs_core import accumulate, bn, max_jump_stat
from rwrs.services.scenery import tail_probability
from .base_experiment import Experiment, Record, proportion_and_stderr


class NonTightExperiment(Experiment):
    """
    P(max_(k<n) |xi_(S_k)| > epsilon b_n). Given the walk the R_n visited values
    are i.i.d., so the conditional probability is 1 - (1 - P(|xi| > epsilon b_n))^R_n;
    its trial mean is the target.
    """
    kind = ExperimentKind.NONTIGHT

    def trial(self, n: int, trial_index: int) -> Record:
        path = self.simulate_path(n, trial_index)
        sample = accumulate(path, self.scenery_field(trial_index), (1.0,), n)
        p = tail_probability(self.scenery, self.spec.epsilon * bn(n, self.beta), strict=True)
        predicted = -np.expm1(path.local_time.range_size * np.log1p(-p)) if p < 1 else 1.0
        return {"exceeds": max_jump_stat(sample, self.beta) > self.spec.epsilon, "predicted": float(predicted)}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = proportion_and_stderr([r["exceeds"] for r in records])
        target = float(np.mean([r["predicted"] for r in records]))
        row = self.make_row(n, estimate, stderr, target, "mean of 1 - (1 - P(|xi| > eps b_n))^R_n")
        band = max(math.sqrt(target * (1 - target) / len(records)), 1.0 / len(records))
        row.passed = self.within_band(estimate, band, target)
        logging.info(f"nontight n={n}: P(max jump > eps) ~ {estimate:.4f} +/- {stderr:.3g}, predicted {target:.4f}")
        return row
