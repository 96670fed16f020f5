import logging
from typing import List
from rwrs.models import ExperimentKind, ReportRow
from rwrs.services.rwrs_core import accumulate
from rwrs.services.stable_law import limit_density
from rwrs.services.statistics import interval_mass
from .base_experiment import Experiment, Record


class IntervalLltExperiment(Experiment):
    kind = ExperimentKind.LLT_NONLATTICE
    requires_lattice = False

    def trial(self, n: int, trial_index: int) -> Record:
        sample = accumulate(self.simulate_path(n, trial_index), self.scenery_field(trial_index), (1.0,), n)
        return {"z": sample.z_values[0]}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        spec = self.spec
        result = interval_mass([r["z"] for r in records], n, self.beta, spec.x, spec.a, spec.b)
        target = limit_density(self.law, spec.x, self.settings.density_tol)
        logging.info(f"llt-nonlattice n={n}: estimate {result.estimate:.6g} +/- {result.stderr:.3g}, target {target:.6g}")
        return self.make_row(
            n, result.estimate, result.stderr, target, "C(x) = f(x/c)/c (limit_density)",
            lower=result.lower, upper=result.upper,
        )
