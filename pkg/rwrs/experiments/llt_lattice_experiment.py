import logging
from typing import List
import numpy as np
from rwrs.models import ExperimentKind, LatticeCase, ReportRow
from rwrs.services.rwrs_core import accumulate
from rwrs.services.scenery import admissible_residue
from rwrs.services.stable_law import limit_density
from rwrs.services.statistics import lattice_point_mass
from .base_experiment import Experiment, Record


class LatticeLltExperiment(Experiment):
    """(b_n / d0) P(Z_n = z*) against C(x) for integer sceneries, with the residue law checked on every trial."""
    kind = ExperimentKind.LLT_LATTICE
    requires_lattice = True

    def trial(self, n: int, trial_index: int) -> Record:
        sample = accumulate(self.simulate_path(n, trial_index), self.scenery_field(trial_index), (1.0,), n)
        return {"z": int(sample.z_values[0])}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        z = np.array([r["z"] for r in records], dtype=np.int64)
        d0 = self.scenery.d0
        residue = admissible_residue(self.scenery, n)
        parity_violations = int(np.count_nonzero((z - residue) % d0))
        result = lattice_point_mass(z, n, self.beta, self.spec.x, d0, residue)
        target = limit_density(self.law, self.spec.x, self.settings.density_tol)
        row = self.make_row(
            n, result.estimate, result.stderr, target, "C(x) = f(x/c)/c (limit_density)",
            case=result.case.value, requested_point=result.requested_point, target_point=result.target_point,
            vanishing_frequency=result.vanishing_frequency, residue=residue, parity_violations=parity_violations,
        )
        if parity_violations or (result.case == LatticeCase.VANISHING and result.vanishing_frequency > 0):
            logging.warning(f"llt-lattice n={n}: {parity_violations} samples outside {residue} + {d0}Z")
            row.passed = False
        logging.info(f"llt-lattice n={n}: {result.case.value} case, estimate {result.estimate:.6g}, target {target:.6g}")
        return row

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        if len(rows) < 2:
            return []
        first, last = rows[0], rows[-1]
        if abs(last.estimate - last.target) >= abs(first.estimate - first.target):
            return [f"llt-lattice: n={last.n} is not closer to C(x) than n={first.n}"]
        return []
