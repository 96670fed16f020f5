import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Dict, List
from rwrs.core.errors import ConfigError
from rwrs.models import ExperimentKind, ExperimentSpec, ReportRow, Settings
from rwrs.services.rwrs_core import accumulate
from rwrs.services.statistics import ORACLE_MAX_N, exact_small_oracle
from .base_experiment import Experiment, Record

# Score reported when an outcome has zero probability under the exact law.
IMPOSSIBLE_SCORE = 1e12


class OracleCheckExperiment(Experiment):
    """
    Monte Carlo pmf of Z_n against exhaustive enumeration.

    The estimate is the largest atom deviation in binomial standard errors;
    the row passes when it stays under the configured sigma band.
    """
    kind = ExperimentKind.ORACLE_CHECK
    requires_critical_walk = False
    requires_lattice = True
    min_n = 1

    def __init__(self, spec: ExperimentSpec, settings: Settings = Settings()):
        super().__init__(spec, settings)
        if not self.walk.is_finite or not self.scenery.is_finite:
            raise ConfigError("oracle-check needs a finite step table and a finite scenery support")
        if spec.n_grid[-1] > ORACLE_MAX_N:
            raise ConfigError(f"oracle-check supports n <= {ORACLE_MAX_N}, got {spec.n_grid[-1]}")
        self.oracles: Dict[int, Dict[int, Fraction]] = {}

    def oracle(self, n: int) -> Dict[int, Fraction]:
        if n not in self.oracles:
            self.oracles[n] = exact_small_oracle(self.walk, self.scenery, n, self.settings)
        return self.oracles[n]

    def trial(self, n: int, trial_index: int) -> Record:
        sample = accumulate(self.simulate_path(n, trial_index), self.scenery_field(trial_index), (1.0,), n)
        return {"z": int(sample.z_values[0])}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        pmf = self.oracle(n)
        observed = Counter(r["z"] for r in records)
        m = len(records)
        worst, worst_atom = 0.0, None
        for atom, probability in pmf.items():
            p = float(probability)
            frequency = observed.get(atom, 0) / m
            stderr = math.sqrt(p * (1 - p) / m)
            if stderr > 0:
                score = abs(frequency - p) / stderr
            else:
                score = 0.0 if frequency == p else IMPOSSIBLE_SCORE
            if score > worst:
                worst, worst_atom = score, atom
        off_support = sum(count for atom, count in observed.items() if atom not in pmf)
        if off_support:
            worst = IMPOSSIBLE_SCORE
        row = self.make_row(
            n, worst, 0.0, 0.0, "exact_small_oracle (enumeration)",
            worst_atom=worst_atom, off_support=off_support, impossible=worst >= IMPOSSIBLE_SCORE,
            pmf={str(atom): str(p) for atom, p in pmf.items()},
            frequencies={str(atom): observed.get(atom, 0) / m for atom in pmf},
        )
        row.passed = worst < self.settings.sigma_band
        logging.info(f"oracle-check n={n}: max atom deviation {worst:.3f} s.e. at z={worst_atom}")
        return row
