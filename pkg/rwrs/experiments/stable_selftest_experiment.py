import logging
import math
from typing import List
import numpy as np
from rwrs.models import ExperimentKind, ExperimentSpec, ReportRow, Settings, StableParams, StreamRole
from rwrs.services.rng import stream
from rwrs.services.stable_law import cdf_table, cf_eval, density, sample, validate
from rwrs.services.statistics import empirical_cf, ks_distance
from .base_experiment import Experiment, Record

U_GRID = (0.5, 1.0, 2.0)


class StableSelfTestExperiment(Experiment):
    """
    Sampler, characteristic function and CDF of every configured stable law
    checked against each other. Each n is a sample count per trial; samples of
    all trials are pooled.
    """
    kind = ExperimentKind.STABLE_SELFTEST
    requires_critical_walk = False
    min_n = 1

    def __init__(self, spec: ExperimentSpec, settings: Settings = Settings()):
        super().__init__(spec, settings)
        self.laws = [StableParams(*map(float, triple)) for triple in spec.stable]
        for params in self.laws:
            validate(params)

    def trial(self, n: int, trial_index: int) -> Record:
        rng = stream(self.spec.seed, trial_index, StreamRole.AUXILIARY)
        return {"samples": [sample(params, rng, n) for params in self.laws]}

    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        total = n * len(records)
        threshold = self.settings.sigma_band / math.sqrt(total)
        laws, worst_cf, worst_ks = {}, 0.0, 0.0
        for index, params in enumerate(self.laws):
            pooled = np.concatenate([r["samples"][index] for r in records])
            deviation = float(np.max(np.abs(empirical_cf(pooled, U_GRID, self.settings) - cf_eval(params, U_GRID))))
            ks = ks_distance(pooled, cdf_table(params, self.settings))
            worst_cf, worst_ks = max(worst_cf, deviation), max(worst_ks, ks)
            laws[str(params.as_list())] = {
                "cf_deviation": deviation, "ks_distance": ks,
                "density_at_0": density(params, 0.0, self.settings.density_tol),
            }
        row = self.make_row(
            n, worst_cf, 1 / math.sqrt(total), 0.0, "cf_eval at u in {0.5, 1, 2}",
            total_samples=total, laws=laws, max_ks_distance=worst_ks, threshold=threshold,
        )
        row.passed = worst_cf <= threshold and worst_ks <= threshold
        logging.info(f"stable-selftest {total} samples: CF deviation {worst_cf:.4g}, KS {worst_ks:.4g}, threshold {threshold:.4g}")
        return row
