import logging
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.statistics import l_stat, l_stat_target
from .base_experiment import Experiment, Record, mean_and_stderr


class LocalTimeFunctionalExperiment(Experiment):
    """Trial mean of L_n(gamma) against Gamma(gamma+1)/(pi A)^(gamma-1) sum_i |theta_i|^gamma dt_i."""
    kind = ExperimentKind.TECH1

    def trial(self, n: int, trial_index: int) -> Record:
        path = self.simulate_path(n, trial_index, self.spec.checkpoint_times)
        report = l_stat(path.local_time, self.spec.thetas, self.spec.gamma, n)
        return {"L": report.L_value, "L_signed": report.L_signed_value}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        spec = self.spec
        estimate, stderr = mean_and_stderr([r["L"] for r in records])
        signed, signed_stderr = mean_and_stderr([r["L_signed"] for r in records])
        target, signed_target = l_stat_target(self.walk.A, spec.thetas, spec.checkpoint_times, spec.gamma)
        logging.info(f"tech1 n={n}: L_n = {estimate:.6g} +/- {stderr:.3g}, target {target:.6g}")
        return self.make_row(
            n, estimate, stderr, target, "Gamma(gamma+1)/(pi A)^(gamma-1) sum |theta_i|^gamma dt_i",
            signed_estimate=signed, signed_stderr=signed_stderr, signed_target=signed_target,
        )

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        distances = [abs(row.estimate - row.target) for row in rows]
        if any(b > a for a, b in zip(distances, distances[1:])):
            return [f"tech1: distance to target is not decreasing over n ({', '.join(f'{d:.4g}' for d in distances)})"]
        return []
