import math
from typing import List, Optional, Sequence
import numpy as np
from rwrs.models import LocalTimeField, Path, SceneryModel, StableParams, TrajectorySample
from .scenery import SceneryField, scenery_cf
from .stable_law import sample as stable_sample

_INT_SAFE = 2**62


def bn(n: int, beta: float) -> float:
    """b_n = n^(1/beta) (ln n)^((beta-1)/beta)."""
    if n < 2:
        raise ValueError(f"b_n needs n >= 2, got {n}")
    return n ** (1 / beta) * math.log(n) ** ((beta - 1) / beta)


def checkpoint_steps(n: int, checkpoint_times: Sequence[float]) -> List[int]:
    """[n t_i] for every checkpoint time."""
    return [int(math.floor(n * t + 1e-12)) for t in checkpoint_times]


def _is_integer_field(field: SceneryField) -> bool:
    return field.model.is_lattice and float(field.scale).is_integer()


def _prefix_sums(values: np.ndarray, steps: Sequence[int], exact_integers: bool) -> List[float]:
    if exact_integers and values.size and float(np.max(np.abs(values))) * values.size < _INT_SAFE:
        prefix = np.concatenate([[0], np.cumsum(values.astype(np.int64))])
        return [float(prefix[k]) for k in steps]
    # Compensated summation per segment, then across segments.
    sums, previous, running = [], 0, []
    for k in steps:
        running.append(math.fsum(values[previous:k]))
        sums.append(math.fsum(running))
        previous = k
    return sums


def accumulate(
    path: Path, field: SceneryField, checkpoint_times: Sequence[float] = (1.0,), n: Optional[int] = None
) -> TrajectorySample:
    """
    Z_[n t_i] = sum_{k < [n t_i]} xi_(S_k), streamed over time, together with max_{k<n} |xi_(S_k)|.

    n is the scale parameter (defaults to the path length); every [n t_i] must be <= path.n.
    """
    n = path.n if n is None else int(n)
    steps = checkpoint_steps(n, checkpoint_times)
    if steps != sorted(steps) or steps[-1] > path.n:
        raise ValueError(f"Checkpoint steps {steps} must be sorted and within the path length {path.n}")
    site_values = field.values_at(path.local_time.sites)
    horizon = min(n, path.n)
    along_path = site_values[path.visit_index[:max(horizon, steps[-1])]]
    z_values = _prefix_sums(along_path, steps, _is_integer_field(field))
    max_abs = float(np.max(np.abs(along_path[:horizon]))) if horizon else 0.0
    return TrajectorySample(
        n=n, checkpoint_times=tuple(float(t) for t in checkpoint_times), z_values=tuple(z_values),
        max_abs_scenery_on_path=max_abs, local_time=path.local_time, checkpoint_steps=tuple(steps),
    )


def site_sum(local_time: LocalTimeField, field: SceneryField, checkpoint: Optional[int] = None) -> float:
    """sum_y xi_y N(y) from the local-time map; checkpoint selects N_(k_j) instead of N_n."""
    counts = local_time.counts if checkpoint is None else local_time.counts_until(checkpoint)
    values = field.values_at(local_time.sites)
    if _is_integer_field(field) and float(np.max(np.abs(values))) * local_time.n < _INT_SAFE:
        return float(np.sum(values.astype(np.int64) * counts))
    return math.fsum(values * counts)


def normalize(sample: TrajectorySample, beta: float) -> List[float]:
    scale = bn(sample.n, beta)
    return [z / scale for z in sample.z_values]


def max_jump_stat(sample: TrajectorySample, beta: float) -> float:
    """max_{k<n} |xi_(S_k)| / b_n."""
    return sample.max_abs_scenery_on_path / bn(sample.n, beta)


def conditional_draw(v_n: float, params: StableParams, rng: np.random.Generator, size=None):
    """
    Z_n given the walk for an exactly S_beta scenery: V_n^(1/beta) times an S_beta draw,
    because prod_y phi(u N(y)) = phi(u V_n^(1/beta)).
    """
    return v_n ** (1 / params.beta) * stable_sample(params, rng, size)


def quenched_cf(local_time: LocalTimeField, model: SceneryModel, u: float) -> complex:
    """E[exp(iu Z_n) | walk] = prod_y phi_xi(u N_n(y)), grouped by distinct count."""
    distinct, multiplicity = np.unique(local_time.counts, return_counts=True)
    value = complex(1.0)
    for count, times in zip(distinct, multiplicity):
        value *= scenery_cf(model, u * float(count)) ** int(times)
    return value
