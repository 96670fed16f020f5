import logging
import time
from multiprocessing import Pool
from typing import List, Optional, Tuple
from .result import Result
from rwrs.experiments import EXPERIMENTS, Experiment
from rwrs.experiments.base_experiment import Record
from rwrs.models import ExperimentReport, ExperimentSpec, ReportRow, Settings

# The ExperimentRunner is the engine of the toolkit
# It resolves the walk and scenery models named by an ExperimentSpec, runs M independent trials per n
# and reduces them to one report row per n with the theoretical target recomputed at run time
# Trials fan out over a process pool; records are merged in trial-index order so the report
# does not depend on the number of workers

# Configure logging
logging.basicConfig(level=logging.DEBUG, format="%(levelname)s: %(message)s")


def _run_trial(task: Tuple[Experiment, int, int]) -> Record:
    experiment, n, trial_index = task
    return experiment.trial(n, trial_index)


class ExperimentRunner:
    def __init__(self, spec: ExperimentSpec, settings: Settings = Settings()):
        self.spec = spec
        self.settings = settings
        self.experiment = EXPERIMENTS[spec.kind](spec, settings)
        self.report: Optional[ExperimentReport] = None
        logging.debug(
            f"{spec.experiment}: walk {self.experiment.walk.label} (A={self.experiment.walk.A}), "
            f"scenery {self.experiment.scenery.name} (beta={self.experiment.beta}), "
            f"limit scale c={self.experiment.law.scale_c if self.experiment.law else None}"
        )

    def run(self) -> Result:
        """Run every n of the grid and collect the report."""
        spec = self.spec
        logging.info(f"Starting {spec.experiment}: n_grid={spec.n_grid}, trials={spec.trials}, workers={spec.workers}")
        started = time.perf_counter()

        rows: List[ReportRow] = []
        for n in spec.n_grid:
            records = self.collect(n)
            rows.append(self.experiment.summarize(n, records))
        flags = self.experiment.review(rows)
        for flag in flags:
            logging.warning(flag)

        self.report = ExperimentReport(
            experiment=spec.experiment,
            rows=rows,
            flags=flags,
            metadata={
                "seed": spec.seed,
                "config_digest": spec.digest(),
                "wall_time_s": round(time.perf_counter() - started, 3),
                "walk": spec.walk,
                "scenery": self.experiment.scenery.name,
                "workers": spec.workers,
            },
        )
        logging.info(f"Finished {spec.experiment} in {self.report.metadata['wall_time_s']} s")
        return Result.STATISTICAL_FLAG if flags else Result.RAN

    def collect(self, n: int) -> List[Record]:
        """Per-trial records for one n, in trial-index order."""
        tasks = [(self.experiment, n, trial_index) for trial_index in range(self.spec.trials)]
        logging.debug(f"{self.spec.experiment} n={n}: dispatching {len(tasks)} trials")
        if self.spec.workers == 1:
            return [_run_trial(task) for task in tasks]
        with Pool(processes=self.spec.workers) as pool:
            return pool.map(_run_trial, tasks, chunksize=self.settings.worker_chunk)

    def get_report(self) -> ExperimentReport:
        if self.report is None:
            raise RuntimeError("run() must be called before get_report()")
        return self.report
