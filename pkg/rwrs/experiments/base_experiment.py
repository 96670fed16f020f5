import math
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, Tuple
import numpy as np
from rwrs.core.errors import ConfigError
from rwrs.models import ExperimentKind, ExperimentSpec, LimitLaw, Path, ReportRow, Settings, StreamRole
from rwrs.services.rng import field_key, stream
from rwrs.services.rwrs_core import checkpoint_steps
from rwrs.services.scenery import SceneryField, builtin_scenery
from rwrs.services.stable_law import limit_law
from rwrs.services.walk_engine import builtin_model, simulate

Record = Dict[str, Any]


class Experiment(ABC):
    """
    Base class for every experiment kind.

    trial() runs one independent replicate and returns a small picklable
    record; summarize() reduces the records of one n (in trial order) to a
    report row. Both must be pure functions of (spec, n, trial index).
    """
    kind: ExperimentKind
    requires_critical_walk = True
    requires_lattice: Optional[bool] = None
    min_n = 2

    def __init__(self, spec: ExperimentSpec, settings: Settings = Settings()):
        self.spec = spec
        self.settings = settings
        self.walk = builtin_model(spec.walk, settings)
        self.scenery = builtin_scenery(spec.scenery)
        self.beta = self.scenery.beta
        if spec.n_grid[0] < self.min_n:
            raise ConfigError(f"Experiment {spec.experiment} needs n >= {self.min_n}, got {spec.n_grid[0]}")
        if self.requires_critical_walk and not self.walk.is_critical:
            raise ConfigError(f"Experiment {spec.experiment} needs a critical-case walk, '{spec.walk}' has no A")
        if self.requires_lattice is True and not self.scenery.is_lattice:
            raise ConfigError(f"Experiment {spec.experiment} needs a lattice scenery, got '{self.scenery.name}'")
        if self.requires_lattice is False and self.scenery.is_lattice:
            raise ConfigError(f"Experiment {spec.experiment} needs a non-lattice scenery, got '{self.scenery.name}'")
        self.law: Optional[LimitLaw] = limit_law(self.scenery.attraction, self.walk.A) if self.walk.is_critical else None

    def simulate_path(self, n: int, trial_index: int, times: Sequence[float] = (1.0,)) -> Path:
        steps = checkpoint_steps(n, times)
        rng = stream(self.spec.seed, trial_index, StreamRole.WALK)
        return simulate(self.walk, max(n, steps[-1], 1), steps, rng, self.settings)

    def scenery_field(self, trial_index: int) -> SceneryField:
        return SceneryField(self.scenery, field_key(self.spec.seed, trial_index), self.walk.dimension, self.settings)

    @abstractmethod
    def trial(self, n: int, trial_index: int) -> Record:
        pass

    @abstractmethod
    def summarize(self, n: int, records: List[Record]) -> ReportRow:
        pass

    def trend_flags(self, rows: List[ReportRow]) -> List[str]:
        return []

    def make_row(self, n: int, estimate: float, stderr: float, target: float, source: str, **details) -> ReportRow:
        return ReportRow(
            experiment=self.spec.experiment, n=int(n), trials=self.spec.trials,
            estimate=float(estimate), stderr=float(stderr), target=float(target), target_source=source,
            seed=self.spec.seed, details=details,
        )

    def review(self, rows: List[ReportRow]) -> List[str]:
        """Apply the acceptance bracket to the largest n and collect statistical flags."""
        if rows and self.spec.bracket is not None:
            last = rows[-1]
            verdict = self.in_bracket(last.estimate)
            last.passed = verdict if last.passed is None else (last.passed and verdict)
        flags = [
            f"n={row.n}: estimate {row.estimate:.6g} rejected against target {row.target:.6g} ({row.target_source})"
            for row in rows if row.passed is False
        ]
        return flags + self.trend_flags(rows)

    def in_bracket(self, value: float) -> Optional[bool]:
        if self.spec.bracket is None:
            return None
        lo, hi = self.spec.bracket
        return bool(lo <= value <= hi)

    def within_band(self, estimate: float, stderr: float, target: float) -> bool:
        return abs(estimate - target) <= self.settings.sigma_band * stderr


def mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        return float(values.mean()), 0.0
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(values.size))


def proportion_and_stderr(flags: Sequence[bool]) -> Tuple[float, float]:
    flags = np.asarray(flags, dtype=bool)
    p = float(flags.mean())
    return p, math.sqrt(p * (1 - p) / flags.size)


def increasing(values: Sequence[float]) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))
