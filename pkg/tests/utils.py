import math
from typing import Dict, Tuple
import numpy as np
from rwrs.models import CSV_COLUMNS, SceneryModel, WalkModel, pack_sites
from rwrs.services.scenery import SceneryField, builtin_scenery


def validate_report(report, spec):
    """
    Validates an experiment report against the run contract.

    Rules:
    1. There is exactly one row per n of the grid, in grid order.
    2. Every row carries the spec's experiment, trial count and seed.
    3. Every target is finite and labelled with its source.
    4. Standard errors are finite and non-negative.
    5. The metadata carries the seed and the config digest.

    :param report: The generated ExperimentReport.
    :param spec: The ExperimentSpec the report was produced from.
    :raises AssertionError: If any rule is violated.
    """
    assert [row.n for row in report.rows] == list(spec.n_grid), (
        f"Rows {[row.n for row in report.rows]} do not cover n_grid {spec.n_grid}"
    )
    for row in report.rows:
        assert row.experiment == spec.experiment
        assert row.trials == spec.trials
        assert row.seed == spec.seed
        assert math.isfinite(row.target), f"n={row.n}: target {row.target} is not finite"
        assert row.target_source, f"n={row.n}: target has no source"
        assert math.isfinite(row.stderr) and row.stderr >= 0, f"n={row.n}: bad stderr {row.stderr}"
        assert set(row.csv_record()) == set(CSV_COLUMNS)
    assert report.metadata["seed"] == spec.seed
    assert report.metadata["config_digest"] == spec.digest()


def assert_within_stderr(estimate, stderr, target, band=4.0, floor=0.0):
    """Asserts |estimate - target| <= band * stderr + floor."""
    assert abs(estimate - target) <= band * stderr + floor, (
        f"estimate {estimate} is more than {band} s.e. ({stderr}) + {floor} away from {target}"
    )


def frozen_walk(dimension: int = 2) -> WalkModel:
    """Walk that never moves (test-only)."""
    return WalkModel(label="frozen", dimension=dimension, steps=((0,) * dimension,), probs=(1.0,))


def right_walk() -> WalkModel:
    """Deterministic walk S_k = k on Z (test-only)."""
    return WalkModel(label="right", dimension=1, steps=((1,),), probs=(1.0,))


class FixedSceneryField(SceneryField):
    """Scenery field with explicitly assigned site values (test-only)."""
    def __init__(self, values: Dict[Tuple[int, ...], float], dimension: int, model: SceneryModel = None):
        super().__init__(model or builtin_scenery("rademacher"), key=0, dimension=dimension)
        self.fixed = {int(pack_sites(np.asarray([p]), dimension)[0]): float(v) for p, v in values.items()}

    def values_at(self, sites: np.ndarray) -> np.ndarray:
        keys = np.asarray(sites, dtype=np.int64).reshape(-1)
        return self.scale * np.array([self.fixed[int(k)] for k in keys], dtype=np.float64)
