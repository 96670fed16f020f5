import logging
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.stable_law import limit_constant
from rwrs.services.statistics import borne_ratio, holder_bound
from .base_experiment import Experiment, Record, increasing, mean_and_stderr


class BorneExperiment(Experiment):
    """
    Mean of n (ln n)^(beta-1) / V_n, which stays bounded in n. Its almost-sure
    limit c^(-beta) serves as target; for beta > 1 every trial also checks the
    Hoelder inequality n <= V_n^(1/beta) R_n^((beta-1)/beta).
    """
    kind = ExperimentKind.BORNE

    def trial(self, n: int, trial_index: int) -> Record:
        field = self.simulate_path(n, trial_index).local_time
        holder_ok = True
        if self.beta > 1:
            lhs, rhs = holder_bound(field, self.beta)
            holder_ok = lhs <= rhs * (1 + 1e-12)
        return {"ratio": borne_ratio(field, self.beta, n), "holder_ok": holder_ok}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = mean_and_stderr([r["ratio"] for r in records])
        violations = sum(1 for r in records if not r["holder_ok"])
        target = limit_constant(self.beta, self.walk.A) ** (-self.beta)
        row = self.make_row(n, estimate, stderr, target, "c^(-beta) with c = limit_constant(beta, A)", holder_violations=violations)
        if violations:
            row.passed = False
        logging.info(f"borne n={n}: mean n (ln n)^(beta-1) / V_n = {estimate:.6g} +/- {stderr:.3g}")
        return row

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        if len(rows) < 3 or not increasing([row.estimate for row in rows]):
            return []
        first, last = rows[0], rows[-1]
        if last.estimate - first.estimate > self.settings.sigma_band * (first.stderr + last.stderr):
            return ["borne: n (ln n)^(beta-1) / V_n shows a significant upward trend"]
        return []
