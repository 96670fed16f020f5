import logging
from typing import List
from scipy import stats
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.stable_law import limit_constant
from rwrs.services.statistics import ks_distance, uniform_site_local_time, vn_scale_ratio
from .base_experiment import Experiment, Record, mean_and_stderr


class VnScaleExperiment(Experiment):
    """
    b_n V_n^(-1/beta) against 1 / limit_constant(beta, A). Each trial also
    reports how far the rescaled local time at a uniform visited site is from Exp(1).
    """
    kind = ExperimentKind.VN_SCALE

    def trial(self, n: int, trial_index: int) -> Record:
        field = self.simulate_path(n, trial_index).local_time
        exponential_gap = ks_distance(uniform_site_local_time(field, self.walk.A, n), stats.expon.cdf)
        return {"ratio": vn_scale_ratio(field, self.beta, n), "exponential_ks": exponential_gap}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = mean_and_stderr([r["ratio"] for r in records])
        gap, _ = mean_and_stderr([r["exponential_ks"] for r in records])
        target = 1 / limit_constant(self.beta, self.walk.A)
        logging.info(f"vn-scale n={n}: b_n V_n^(-1/beta) = {estimate:.6g} +/- {stderr:.3g}, target {target:.6g}")
        return self.make_row(n, estimate, stderr, target, "1 / limit_constant(beta, A)", exponential_ks=gap)
