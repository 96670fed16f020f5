import logging
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.statistics import omega_indicator
from .base_experiment import Experiment, Record, proportion_and_stderr


class OmegaExperiment(Experiment):
    """
    Frequency of Omega_n(gamma); on the event, the lower bounds on N*_n and V_n
    must hold in every trial.
    """
    kind = ExperimentKind.OMEGA
    min_n = 16

    def trial(self, n: int, trial_index: int) -> Record:
        witness = omega_indicator(self.simulate_path(n, trial_index).local_time, self.spec.gamma_omega, self.beta, n)
        violated = witness.holds and not (witness.min_max_count_ok and witness.min_v_ok)
        return {"holds": witness.holds, "violated": violated, "range_ratio": witness.range_ratio, "max_ratio": witness.max_ratio}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        estimate, stderr = proportion_and_stderr([r["holds"] for r in records])
        violations = sum(1 for r in records if r["violated"])
        row = self.make_row(
            n, estimate, stderr, 1.0, "P(Omega_n) = 1 - o(1/b_n)",
            consequence_violations=violations,
            max_range_ratio=max(r["range_ratio"] for r in records),
            max_max_ratio=max(r["max_ratio"] for r in records),
        )
        if violations:
            logging.warning(f"omega n={n}: {violations} trials break the lower bounds implied by Omega_n")
            row.passed = False
        logging.info(f"omega n={n}: P(Omega_n) ~ {estimate:.4f} +/- {stderr:.3g}")
        return row
