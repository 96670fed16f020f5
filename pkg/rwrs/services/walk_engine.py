import logging
import math
from functools import lru_cache
from typing import Optional, Sequence, Tuple
import numpy as np
from rwrs.core.errors import UnknownModelError
from rwrs.models import CheckpointIncrement, LocalTimeField, Path, Settings, WalkModel, pack_sites
from .discrete import IntegerTailLaw, lorentz_tail

BUILTIN_WALKS = ("srw2d", "lazy2d", "cauchy1d", "srw1d")
_CAUCHY_WINDOW = 8


def covariance(model: WalkModel) -> np.ndarray:
    steps = np.asarray(model.steps, dtype=np.float64)
    probs = np.asarray(model.probs, dtype=np.float64)
    mean = probs @ steps
    if np.any(np.abs(mean) > 1e-12):
        raise ValueError(f"Walk {model.label} is not centered (mean step {mean})")
    return (steps * probs[:, None]).T @ steps


def normalization_constant(model: WalkModel) -> Optional[float]:
    """A = 2 sqrt(det Sigma) for centred finite d=2 tables; None when the table is not in the critical case."""
    if model.dimension != 2 or not model.is_finite:
        return None
    det = float(np.linalg.det(covariance(model)))
    if det <= 0:
        return None
    return 2.0 * math.sqrt(det)


def _cauchy_norm() -> float:
    """sum over all k in Z of 1/(1+k^2), which equals pi coth(pi)."""
    return 1.0 + 2.0 * float(lorentz_tail(np.array([1.0]))[0])


@lru_cache(maxsize=1)
def cauchy_scale_oracle(s: float = 2e-4, terms: int = 1_000_000) -> float:
    """
    Numerical a with 1 - Re phi_X(s) ~ a |s| for P(X=k) proportional to 1/(1+k^2).

    Uses 1 - cos(ks) = 2 sin^2(ks/2) over |k| <= terms plus the exact tail of
    the constant part; the oscillating remainder is O(1 / (terms^2 s)).
    """
    k = np.arange(1, terms + 1, dtype=np.float64)
    head = np.sum(2.0 * np.sin(k * s / 2.0) ** 2 / (1.0 + k * k))
    rest = float(lorentz_tail(np.array([terms + 1.0]))[0])
    return 2.0 * (head + rest) / _cauchy_norm() / s


@lru_cache(maxsize=4)
def _cauchy_law(table_size: int) -> IntegerTailLaw:
    return IntegerTailLaw("cauchy1d", lorentz_tail, table_size)


def builtin_model(name: str, settings: Settings = Settings()) -> WalkModel:
    if name == "srw2d":
        steps = ((1, 0), (-1, 0), (0, 1), (0, -1))
        probs = (0.25,) * 4
        model = WalkModel(label=name, dimension=2, steps=steps, probs=probs, A=1.0)
    elif name == "lazy2d":
        steps = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1))
        probs = (0.5,) + (0.125,) * 4
        model = WalkModel(label=name, dimension=2, steps=steps, probs=probs, A=0.5)
    elif name == "srw1d":
        model = WalkModel(
            label=name, dimension=1, steps=((1,), (-1,)), probs=(0.5, 0.5), A=None,
            notes="oracle-only walk outside the critical case"
        )
    elif name == "cauchy1d":
        norm = _cauchy_norm()
        window = range(-_CAUCHY_WINDOW, _CAUCHY_WINDOW + 1)
        probs = tuple(1.0 / ((1 + k * k) * norm) for k in window)
        tail_mass = 2.0 * float(lorentz_tail(np.array([_CAUCHY_WINDOW + 1.0]))[0]) / norm
        model = WalkModel(
            label=name, dimension=1, steps=tuple((k,) for k in window), probs=probs,
            A=math.tanh(math.pi), sampler="cauchy1d", tail_mass=tail_mass,
            notes="P(X=k) proportional to 1/(1+k^2); chosen instance of the d=1 critical case",
        )
        oracle = cauchy_scale_oracle()
        if abs(oracle - model.A) > settings.cauchy_oracle_tol:
            raise RuntimeError(f"cauchy1d scale oracle {oracle:.6f} disagrees with tanh(pi) = {model.A:.6f}")
        logging.debug(f"cauchy1d: A = tanh(pi) = {model.A:.6f}, CF oracle = {oracle:.6f}")
    else:
        raise UnknownModelError(f"Unknown walk model '{name}', expected one of {BUILTIN_WALKS}")

    computed = normalization_constant(model)
    if computed is not None and abs(computed - model.A) > 1e-12:
        raise RuntimeError(f"{name}: stored A = {model.A} but 2 sqrt(det Sigma) = {computed}")
    return model


def sample_steps(model: WalkModel, rng: np.random.Generator, size: int, settings: Settings = Settings()) -> np.ndarray:
    """`size` i.i.d. steps as an int64 array of shape (size, dimension)."""
    if model.sampler == "cauchy1d":
        law = _cauchy_law(settings.tail_table_size)
        u = rng.random(size)
        zero = u < 1.0 / _cauchy_norm()
        # Reuse the uniform: conditionally on being non-zero it is uniform again.
        rescaled = (u - 1.0 / _cauchy_norm()) / (1.0 - 1.0 / _cauchy_norm())
        sign = np.where(rng.random(size) < 0.5, -1, 1)
        magnitude = law.magnitudes(1.0 - np.clip(rescaled, 0.0, 1.0 - 2**-53)).astype(np.int64)
        return np.where(zero, 0, sign * magnitude).reshape(size, 1)
    table = np.asarray(model.steps, dtype=np.int64)
    probs = np.asarray(model.probs, dtype=np.float64)
    if np.all(probs == probs[0]):
        index = rng.integers(0, len(probs), size=size)
    else:
        index = rng.choice(len(probs), size=size, p=probs / probs.sum())
    return table[index]


def sample_step(model: WalkModel, rng: np.random.Generator) -> Tuple[int, ...]:
    return tuple(int(c) for c in sample_steps(model, rng, 1)[0])


def simulate(
    model: WalkModel,
    n: int,
    checkpoints: Sequence[int] = (),
    rng: Optional[np.random.Generator] = None,
    settings: Settings = Settings(),
) -> Path:
    """
    Simulate S_0 = 0, ..., S_(n-1) and their local times.

    Each checkpoint k_j records the per-site visits made during steps
    [k_(j-1), k_j); with no checkpoints a single checkpoint at n is used.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    checkpoints = tuple(int(k) for k in checkpoints) or (n,)
    if list(checkpoints) != sorted(checkpoints) or checkpoints[0] < 0 or checkpoints[-1] > n:
        raise ValueError(f"Checkpoints must be sorted within [0, {n}], got {checkpoints}")
    rng = rng if rng is not None else np.random.default_rng()

    positions = np.zeros((n, model.dimension), dtype=np.int64)
    if n > 1:
        np.cumsum(sample_steps(model, rng, n - 1, settings), axis=0, out=positions[1:])
    keys = pack_sites(positions, model.dimension)
    sites, visit_index, counts = np.unique(keys, return_inverse=True, return_counts=True)
    visit_index = visit_index.reshape(-1)

    increments = []
    previous = 0
    for k in checkpoints:
        segment_sites, segment_counts = np.unique(visit_index[previous:k], return_counts=True)
        increments.append(CheckpointIncrement(previous, k, segment_sites, segment_counts))
        previous = k

    local_time = LocalTimeField(
        dimension=model.dimension, n=n, sites=sites, counts=counts, increments=tuple(increments)
    )
    at_checkpoints = tuple(
        tuple(int(c) for c in positions[max(k - 1, 0)]) for k in checkpoints
    )
    for array in (sites, counts, visit_index):
        array.setflags(write=False)
    return Path(
        n=n, checkpoints=checkpoints, positions_at_checkpoints=at_checkpoints,
        local_time=local_time, visit_index=visit_index,
    )
