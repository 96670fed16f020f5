"""
Local-time functionals and Monte Carlo estimators.

Every estimator returns its value together with a standard error; acceptance
thresholds belong to the experiment configuration, not to these functions.
"""
import itertools
import logging
import math
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple
import numpy as np
from scipy import special, stats
from rwrs.core.errors import DegenerateStatisticError, OracleExplosionError, ParityError
from rwrs.models import (
    FunctionalReport, IntervalEstimate, LatticeCase, LatticeEstimate, LocalTimeField,
    OmegaWitness, SceneryModel, Settings, WalkModel,
)
from .rwrs_core import bn

ORACLE_MAX_N = 12


def v_beta(field: LocalTimeField, beta: float) -> float:
    """V_n = sum_y N_n(y)^beta."""
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return float(np.sum(field.counts.astype(np.float64) ** beta))


def _combined_increments(field: LocalTimeField, thetas: Sequence[float]) -> np.ndarray:
    if len(thetas) != len(field.increments):
        raise ValueError(f"{len(thetas)} thetas given for {len(field.increments)} checkpoint intervals")
    combined = np.zeros(field.sites.size, dtype=np.float64)
    for theta, increment in zip(thetas, field.increments):
        combined[increment.site_index] += theta * increment.counts
    return combined


def l_stat(field: LocalTimeField, thetas: Sequence[float], gamma: float, n: Optional[int] = None) -> FunctionalReport:
    """
    L_n(gamma) = (n (ln n)^(gamma-1))^(-1) sum_x |sum_i theta_i b_(i,n)(x)|^gamma and its signed variant,
    with b_(i,n)(x) = N_[n t_i](x) - N_[n t_(i-1)](x) taken from the field's checkpoint increments.
    """
    n = field.n if n is None else int(n)
    if n < 2:
        raise DegenerateStatisticError(f"L_n needs n >= 2 for its log normalizer, got n={n}")
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    combined = _combined_increments(field, thetas)
    powered = np.abs(combined) ** gamma
    norm = n * math.log(n) ** (gamma - 1)
    return FunctionalReport(
        gamma=gamma,
        thetas=tuple(float(t) for t in thetas),
        times=tuple(inc.stop / n for inc in field.increments),
        L_value=float(np.sum(powered)) / norm,
        L_signed_value=float(np.sum(powered * np.sign(combined))) / norm,
        V_value=v_beta(field, gamma),
    )


def l_stat_target(A: float, thetas: Sequence[float], times: Sequence[float], gamma: float) -> Tuple[float, float]:
    """Almost-sure limits of L_n(gamma) and L'_n(gamma)."""
    deltas = np.diff(np.concatenate([[0.0], np.asarray(times, dtype=np.float64)]))
    thetas = np.asarray(thetas, dtype=np.float64)
    constant = special.gamma(gamma + 1) / (math.pi * A) ** (gamma - 1)
    weights = np.abs(thetas) ** gamma * deltas
    return float(constant * weights.sum()), float(constant * (weights * np.sign(thetas)).sum())


def omega_indicator(field: LocalTimeField, gamma: float, beta: float = 2.0, n: Optional[int] = None) -> OmegaWitness:
    """
    Omega_n(gamma) = {R_n <= n / (loglog n)^(1/4) and N*_n <= n^gamma}.

    When the event holds the witness also records the consequences
    N*_n >= (loglog n)^(1/4) and V_n >= n^(1 - gamma (1 - beta)_+).
    """
    n = field.n if n is None else int(n)
    if n < 16:
        raise ValueError(f"Omega_n needs n >= 16 so that loglog n > 0, got {n}")
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")
    loglog_root = math.log(math.log(n)) ** 0.25
    range_ratio = field.range_size / (n / loglog_root)
    max_ratio = field.max_count / n**gamma
    holds = range_ratio <= 1 and max_ratio <= 1
    if not holds:
        return OmegaWitness(holds=False, range_ratio=range_ratio, max_ratio=max_ratio)
    v_value = v_beta(field, beta)
    lower = n ** (1 - gamma * max(1 - beta, 0.0))
    return OmegaWitness(
        holds=True, range_ratio=range_ratio, max_ratio=max_ratio,
        min_max_count_ok=field.max_count >= loglog_root,
        min_v_ok=v_value >= lower * (1 - 1e-12),
        v_value=v_value, v_lower_bound=lower,
    )


def empirical_cf(samples: Sequence[float], u_grid: Sequence[float], settings: Settings = Settings()) -> np.ndarray:
    """(1/M) sum_j exp(i u Z_j) for every u, accumulated in blocks."""
    samples = np.asarray(samples, dtype=np.float64)
    if samples.size == 0:
        raise ValueError("empirical_cf needs at least one sample")
    u = np.asarray(u_grid, dtype=np.float64)
    total = np.zeros(u.size, dtype=np.complex128)
    for start in range(0, samples.size, settings.cf_chunk):
        block = samples[start:start + settings.cf_chunk]
        total += np.exp(1j * np.outer(u, block)).sum(axis=1)
    return total / samples.size


def empirical_cf_stderr(samples: Sequence[float], u: float) -> float:
    """Standard error of the real and imaginary parts combined, sqrt((1 - |mean|^2) / M)."""
    samples = np.asarray(samples, dtype=np.float64)
    mean = np.mean(np.exp(1j * u * samples))
    return math.sqrt(max(1.0 - abs(mean) ** 2, 0.0) / samples.size)


def ks_distance(samples: Sequence[float], cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Sup distance between the empirical CDF of the samples and `cdf`."""
    return float(stats.kstest(np.asarray(samples, dtype=np.float64), cdf).statistic)


def _binomial(p: float, m: int) -> float:
    return math.sqrt(p * (1 - p) / m)


def lattice_frequencies(z_samples: Sequence[int], d0: int, residue: int) -> Dict[int, float]:
    """Relative frequency of every admissible point r + d0 Z that occurs."""
    z = np.asarray(z_samples, dtype=np.int64)
    admissible = z[(z - residue) % d0 == 0]
    points, counts = np.unique(admissible, return_counts=True)
    return {int(p): c / z.size for p, c in zip(points, counts)}


def lattice_point_mass(
    z_samples: Sequence[int],
    n: int,
    beta: float,
    x: float,
    d0: int,
    residue: Optional[int] = None,
    strict: bool = False,
) -> LatticeEstimate:
    """
    (b_n / d0) * frequency(Z_n = z*), an estimator of C(x).

    z* is floor(b_n x) when it lies in the admissible class residue + d0 Z
    (positive case); otherwise the vanishing case is reported with the
    observed frequency at floor(b_n x) and z* snaps to the nearest admissible
    point (ties go down). strict=True turns the vanishing case into a ParityError.
    """
    z = np.asarray(z_samples, dtype=np.int64)
    if z.size == 0:
        raise ValueError("lattice_point_mass needs samples")
    residue = int(z[0]) % d0 if residue is None else residue % d0
    scale = bn(n, beta)
    requested = int(math.floor(scale * x))
    offset = (requested - residue) % d0
    if offset == 0:
        case, target, vanishing = LatticeCase.POSITIVE, requested, 0.0
    else:
        if strict:
            raise ParityError(f"floor(b_n x) = {requested} is not in {residue} + {d0}Z; P(Z_n = {requested}) = 0")
        below = requested - offset
        target = below if offset <= d0 - offset else below + d0
        case, vanishing = LatticeCase.VANISHING, float(np.mean(z == requested))
    frequency = float(np.mean(z == target))
    return LatticeEstimate(
        case=case, requested_point=requested, target_point=target,
        estimate=scale / d0 * frequency, stderr=scale / d0 * _binomial(frequency, z.size),
        vanishing_frequency=vanishing,
    )


def interval_mass(z_samples: Sequence[float], n: int, beta: float, x: float, a: float, b: float) -> IntervalEstimate:
    """b_n * frequency(Z_n in [b_n x + a, b_n x + b]) / (b - a), an estimator of C(x)."""
    if not a < b:
        raise ValueError(f"interval_mass needs a < b, got [{a}, {b}]")
    z = np.asarray(z_samples, dtype=np.float64)
    scale = bn(n, beta)
    lower, upper = scale * x + a, scale * x + b
    frequency = float(np.mean((z >= lower) & (z <= upper)))
    factor = scale / (b - a)
    return IntervalEstimate(
        lower=lower, upper=upper, estimate=factor * frequency, stderr=factor * _binomial(frequency, z.size)
    )


def _exact(p: float) -> Fraction:
    return Fraction(p).limit_denominator(10**12)


def exact_small_oracle(
    walk: WalkModel, scenery: SceneryModel, n: int, settings: Settings = Settings()
) -> Dict[int, Fraction]:
    """
    Exact pmf of Z_n by enumerating every step sequence and every scenery
    assignment on the visited sites. Paths are first grouped by their
    multiset of local times, which is all the law of Z_n depends on.
    """
    if not walk.is_finite or not scenery.is_finite:
        raise ValueError("exact_small_oracle needs finite walk and scenery supports")
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"exact_small_oracle supports 1 <= n <= {ORACLE_MAX_N}, got {n}")
    step_count = len(walk.steps)
    if step_count ** (n - 1) > settings.oracle_term_guard:
        raise OracleExplosionError(f"{step_count}^{n - 1} step sequences exceed the guard {settings.oracle_term_guard}")

    step_weights = [_exact(p) for p in walk.probs]
    signatures: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for choice in itertools.product(range(step_count), repeat=n - 1):
        position = (0,) * walk.dimension
        visits = Counter([position])
        weight = Fraction(1)
        for index in choice:
            position = tuple(a + b for a, b in zip(position, walk.steps[index]))
            visits[position] += 1
            weight *= step_weights[index]
        signatures[tuple(sorted(visits.values()))] += weight

    values = [int(v) for v in scenery.values]
    value_weights = [_exact(p) for p in scenery.probs]
    terms = sum(len(values) ** len(signature) for signature in signatures)
    if terms > settings.oracle_term_guard:
        raise OracleExplosionError(f"{terms} scenery assignments exceed the guard {settings.oracle_term_guard}")
    logging.debug(f"Oracle n={n}: {len(signatures)} local-time signatures, {terms} scenery terms")

    pmf: Dict[int, Fraction] = defaultdict(Fraction)
    for signature, path_weight in signatures.items():
        for assignment in itertools.product(range(len(values)), repeat=len(signature)):
            z = sum(values[j] * count for j, count in zip(assignment, signature))
            weight = path_weight
            for j in assignment:
                weight *= value_weights[j]
            pmf[z] += weight
    return dict(sorted(pmf.items()))


def uniform_site_local_time(field: LocalTimeField, A: float, n: Optional[int] = None) -> np.ndarray:
    """(pi A / ln n) N_n(U) for U uniform on the range: one value per visited site, tending to Exp(1)."""
    n = field.n if n is None else int(n)
    return math.pi * A / math.log(n) * field.counts.astype(np.float64)


def holder_bound(field: LocalTimeField, beta: float) -> Tuple[float, float]:
    """(n, V_n^(1/beta) R_n^((beta-1)/beta)); Hoelder gives n <= the second entry for beta > 1."""
    if beta <= 1:
        raise ValueError("holder_bound applies to beta > 1")
    v = v_beta(field, beta)
    return float(field.n), v ** (1 / beta) * field.range_size ** ((beta - 1) / beta)


def vn_scale_ratio(field: LocalTimeField, beta: float, n: Optional[int] = None) -> float:
    """b_n V_n^(-1/beta); its limit is 1 / limit_constant(beta, A)."""
    n = field.n if n is None else int(n)
    return bn(n, beta) * v_beta(field, beta) ** (-1 / beta)


def borne_ratio(field: LocalTimeField, beta: float, n: Optional[int] = None) -> float:
    """n (ln n)^(beta-1) / V_n, whose moments stay bounded in n."""
    n = field.n if n is None else int(n)
    return n * math.log(n) ** (beta - 1) / v_beta(field, beta)


def borne_moment(fields: Sequence[LocalTimeField], beta: float) -> Tuple[float, float]:
    """Monte Carlo mean of n (ln n)^(beta-1) / V_n over independent fields, with its standard error."""
    if not fields:
        raise ValueError("borne_moment needs at least one field")
    ratios = np.array([borne_ratio(f, beta) for f in fields])
    stderr = float(ratios.std(ddof=1) / math.sqrt(ratios.size)) if ratios.size > 1 else 0.0
    return float(ratios.mean()), stderr
