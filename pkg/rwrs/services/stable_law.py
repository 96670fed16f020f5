"""
Strictly stable laws S_beta with characteristic function
phi(u) = exp(-|u|^beta (A1 + i A2 sgn u)).
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Sequence, Union
import numpy as np
from scipy import integrate, special
from rwrs.core.errors import QuadratureError, StableParamsError
from rwrs.models import LimitLaw, Settings, StableParams

ArrayLike = Union[float, np.ndarray]

_MAX_WIDENINGS = 40


def validate(params: StableParams) -> None:
    """Raise StableParamsError naming the first violated constraint."""
    beta, A1, A2 = params.beta, params.A1, params.A2
    if not (0 < beta <= 2):
        raise StableParamsError(f"beta must lie in (0, 2], got {beta}")
    if not (0 < A1 < math.inf):
        raise StableParamsError(f"A1 must be positive and finite, got {A1}")
    if not math.isfinite(A2):
        raise StableParamsError(f"A2 must be finite, got {A2}")
    if beta == 2 and A2 != 0:
        raise StableParamsError(f"A2 must vanish when beta = 2, got {A2}")
    if beta not in (1.0, 2.0):
        bound = abs(math.tan(math.pi * beta / 2))
        if abs(A2 / A1) > bound * (1 + 1e-12):
            raise StableParamsError(
                f"|A2/A1| = {abs(A2 / A1):.6g} exceeds |tan(pi beta/2)| = {bound:.6g}"
            )


def cf_eval(params: StableParams, u: ArrayLike) -> Union[complex, np.ndarray]:
    u_arr = np.asarray(u, dtype=np.float64)
    value = np.exp(-np.abs(u_arr) ** params.beta * (params.A1 + 1j * params.A2 * np.sign(u_arr)))
    return complex(value) if value.ndim == 0 else value


def sample(params: StableParams, rng: np.random.Generator, size=None) -> ArrayLike:
    """
    Chambers-Mallows-Stuck draws.

    For beta not in {1, 2} the law is S(beta, kappa, sigma, 0) with
    sigma^beta = A1 and kappa = -A2 / (A1 tan(pi beta / 2)).
    """
    beta, A1, A2 = params.beta, params.A1, params.A2
    if beta == 2:
        return rng.normal(0.0, math.sqrt(2 * A1), size=size)
    if beta == 1:
        return A1 * np.tan(np.pi * (rng.uniform(size=size) - 0.5)) - A2
    v = rng.uniform(-np.pi / 2, np.pi / 2, size=size)
    w = rng.exponential(1.0, size=size)
    skew = -A2 / A1  # kappa * tan(pi beta / 2)
    shift = math.atan(skew) / beta
    scale = (1 + skew**2) ** (1 / (2 * beta))
    x = (
        scale * np.sin(beta * (v + shift)) / np.cos(v) ** (1 / beta)
        * (np.cos(v - beta * (v + shift)) / w) ** ((1 - beta) / beta)
    )
    return A1 ** (1 / beta) * x


def _tail_integral(params: StableParams, cutoff: float) -> float:
    """Integral of exp(-A1 u^beta) over [cutoff, inf)."""
    beta, A1 = params.beta, params.A1
    s = 1 / beta
    return special.gamma(s) * special.gammaincc(s, A1 * cutoff**beta) / (beta * A1**s)


def truncation_point(params: StableParams, tol: float) -> float:
    """
    Frequency cutoff U with the discarded tail of the inversion integral below tol/2.

    Starts from U = (ln(1/tol)/A1)^(1/beta) and widens while the bound fails.
    """
    cutoff = (max(math.log(1 / tol), 1.0) / params.A1) ** (1 / params.beta)
    for _ in range(_MAX_WIDENINGS):
        if _tail_integral(params, cutoff) / math.pi <= tol / 2:
            return cutoff
        cutoff *= 1.5
    raise QuadratureError(f"Cannot bound the inversion tail below {tol} for {params}")


def density(params: StableParams, x: float, tol: float = 1e-6) -> float:
    """f(x) = (1/pi) * integral_0^inf Re(exp(-iux) phi(u)) du, absolute error <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    beta, A1, A2 = params.beta, params.A1, params.A2
    cutoff = truncation_point(params, tol)

    def integrand(u):
        return math.exp(-A1 * u**beta) * math.cos(u * x + A2 * u**beta)

    value, abserr = integrate.quad(integrand, 0.0, cutoff, epsabs=math.pi * tol / 4, epsrel=0, limit=2000)
    if abserr > math.pi * tol / 2:
        raise QuadratureError(f"Density quadrature at x={x} reached error {abserr:.3g} > tol {tol}")
    return value / math.pi


def cdf(params: StableParams, x: float, tol: float = 1e-6) -> float:
    """Gil-Pelaez inversion: F(x) = 1/2 + (1/pi) * integral_0^inf exp(-A1 u^beta) sin(ux + A2 u^beta) / u du."""
    beta, A1, A2 = params.beta, params.A1, params.A2
    cutoff = max(truncation_point(params, tol), 1.0)

    def integrand(u):
        if u == 0.0:
            return x if beta > 1 else x + (A2 if beta == 1 else 0.0)
        return math.exp(-A1 * u**beta) * math.sin(u * x + A2 * u**beta) / u

    value, abserr = integrate.quad(integrand, 0.0, cutoff, epsabs=math.pi * tol / 4, epsrel=0, limit=2000)
    if abserr > math.pi * tol / 2:
        raise QuadratureError(f"CDF quadrature at x={x} reached error {abserr:.3g} > tol {tol}")
    return min(max(0.5 + value / math.pi, 0.0), 1.0)


@lru_cache(maxsize=64)
def cdf_table(params: StableParams, settings: Settings = Settings()) -> Callable[[np.ndarray], np.ndarray]:
    """Vectorised CDF interpolated on a quantile-shaped grid (tails stretched by |tan|^(1/beta))."""
    validate(params)
    scale = params.A1 ** (1 / params.beta)
    center = -params.A2 if params.beta == 1 else 0.0
    probs = np.linspace(0.0005, 0.9995, settings.cdf_grid_points)
    t = np.tan(np.pi * (probs - 0.5))
    grid = center + scale * np.sign(t) * np.abs(t) ** max(1.0, 1 / params.beta)
    tol = max(settings.density_tol, 1e-8)
    values = np.array([cdf(params, float(x), tol) for x in grid])
    values = np.clip(np.maximum.accumulate(values), 0.0, 1.0)
    logging.debug(f"Tabulated CDF of {params} on [{grid[0]:.4g}, {grid[-1]:.4g}]")

    def table(xs: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(xs, dtype=np.float64), grid, values, left=values[0], right=values[-1])

    return table


def limit_constant(beta: float, A: float) -> float:
    """(Gamma(beta+1) / (pi A)^(beta-1))^(1/beta)."""
    if not (0 < beta <= 2) or not A > 0:
        raise ValueError(f"limit_constant needs 0 < beta <= 2 and A > 0, got beta={beta}, A={A}")
    return (special.gamma(beta + 1) / (math.pi * A) ** (beta - 1)) ** (1 / beta)


def limit_law(base: StableParams, A: float) -> LimitLaw:
    validate(base)
    return LimitLaw(base=base, scale_c=limit_constant(base.beta, A))


def limit_density(law: LimitLaw, x: float, tol: float = 1e-6) -> float:
    """C(x) = f(x / c) / c."""
    c = law.scale_c
    return density(law.base, x / c, tol * c) / c


def combination_params(law: LimitLaw, thetas: Sequence[float], times: Sequence[float]) -> StableParams:
    """
    Law of sum_i theta_i (Y~_{t_i} - Y~_{t_(i-1)}), t_0 = 0.

    Its characteristic function is prod_i phi(c theta_i (t_i - t_(i-1))^(1/beta) u).
    """
    if len(thetas) != len(times):
        raise ValueError("thetas and times must have the same length")
    beta, c = law.base.beta, law.scale_c
    deltas = np.diff(np.concatenate([[0.0], np.asarray(times, dtype=np.float64)]))
    weights = np.abs(np.asarray(thetas, dtype=np.float64)) ** beta * deltas
    a1 = law.base.A1 * c**beta * float(weights.sum())
    a2 = law.base.A2 * c**beta * float((weights * np.sign(thetas)).sum())
    if a1 <= 0:
        raise ValueError("Degenerate combination: every theta is zero")
    return StableParams(beta=beta, A1=a1, A2=a2)


def fdd_cf(law: LimitLaw, thetas: Sequence[float], times: Sequence[float], u: float = 1.0) -> complex:
    """prod_i phi(c theta_i (t_i - t_(i-1))^(1/beta) u)."""
    beta, c = law.base.beta, law.scale_c
    value = complex(1.0)
    previous = 0.0
    for theta, t in zip(thetas, times):
        value *= cf_eval(law.base, c * theta * (t - previous) ** (1 / beta) * u)
        previous = t
    return value
