import logging
import math
import re
from functools import lru_cache, reduce
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union
import numpy as np
from scipy import special
from rwrs.core.errors import UnknownModelError
from rwrs.models import SceneryKind, SceneryModel, Settings, StableParams, TailReport, TailRow, pack_sites
from .discrete import IntegerTailLaw, zeta_tail
from .rng import site_uniforms
from .stable_law import validate

BUILTIN_SCENERIES = ("rademacher", "gaussian", "cauchy-cont", "zeta-lattice", "finite")
_ZETA_PATTERN = re.compile(r"^zeta-lattice\((?P<beta>[0-9.eE+-]+)\)$")
_MIN_UNIFORM = 2.0**-54


def lattice_span(values: Sequence[int]) -> int:
    """gcd of the differences between support points: {u : |phi(u)| = 1} = (2 pi / d0) Z."""
    values = [int(v) for v in values]
    if len(values) < 2:
        raise ValueError("A lattice span needs at least two support points")
    return reduce(math.gcd, (abs(v - values[0]) for v in values[1:]))


def _finite_model(name: str, values: Sequence[int], probs: Sequence[float]) -> SceneryModel:
    pairs = [(int(v), float(p)) for v, p in zip(values, probs) if p > 0]
    if len(pairs) != len(values) or any(float(v) != int(v) for v in values):
        raise ValueError(f"Finite scenery {name} needs integer values with positive probabilities")
    values_arr = np.array([v for v, _ in pairs], dtype=np.float64)
    probs_arr = np.array([p for _, p in pairs], dtype=np.float64)
    if abs(probs_arr.sum() - 1.0) > 1e-12:
        raise ValueError(f"Finite scenery {name} probabilities sum to {probs_arr.sum()}")
    mean = float(probs_arr @ values_arr)
    if abs(mean) > 1e-12:
        raise ValueError(f"Finite scenery {name} must be centred, mean is {mean}")
    variance = float(probs_arr @ values_arr**2)
    magnitudes = np.abs(values_arr)
    tail_constant = max(m**2 * probs_arr[magnitudes >= m].sum() for m in magnitudes)
    return SceneryModel(
        name=name, kind=SceneryKind.LATTICE, attraction=StableParams(2.0, variance / 2, 0.0),
        tail_constant=float(tail_constant), d0=lattice_span([v for v, _ in pairs]),
        values=tuple(v for v, _ in pairs), probs=tuple(p for _, p in pairs),
    )


def _zeta_model(beta: float) -> SceneryModel:
    """Symmetric integer law with P(|xi| = k) proportional to k^(-1-beta), k >= 1."""
    if not 0 < beta < 2:
        raise ValueError(f"zeta-lattice needs beta in (0, 2), got {beta}")
    norm = float(special.zeta(1 + beta))
    tail_limit = 1 / (beta * norm)  # lim t^beta P(|xi| >= t)
    if beta == 1:
        a1 = tail_limit * math.pi / 2
    else:
        a1 = tail_limit * special.gamma(1 - beta) * math.cos(math.pi * beta / 2)
    k = np.arange(1, 100_001, dtype=np.float64)
    sharp = float(np.max(k**beta * special.zeta(1 + beta, k) / norm))
    return SceneryModel(
        name=f"zeta-lattice({beta:g})", kind=SceneryKind.LATTICE, attraction=StableParams(beta, float(a1), 0.0),
        tail_constant=max(sharp, tail_limit), d0=lattice_span([-2, -1, 1, 2]), zeta_norm=norm,
    )


def builtin_scenery(name: Union[str, Mapping[str, Any]]) -> SceneryModel:
    params: Dict[str, Any] = {}
    if isinstance(name, Mapping):
        params = {k: v for k, v in name.items() if k != "name"}
        name = name.get("name", "")
    match = _ZETA_PATTERN.match(name)
    if match:
        name, params = "zeta-lattice", {"beta": float(match.group("beta"))}

    if name == "rademacher":
        model = _finite_model("rademacher", (-1, 1), (0.5, 0.5))
    elif name == "gaussian":
        t = np.geomspace(1e-2, 40, 4001)
        sharp = float(np.max(t**2 * special.erfc(t / math.sqrt(2))))
        model = SceneryModel(
            name=name, kind=SceneryKind.NONLATTICE, attraction=StableParams(2.0, 0.5, 0.0), tail_constant=sharp
        )
    elif name == "cauchy-cont":
        model = SceneryModel(
            name=name, kind=SceneryKind.NONLATTICE, attraction=StableParams(1.0, 1.0, 0.0), tail_constant=1.0
        )
    elif name == "zeta-lattice":
        if "beta" not in params:
            raise UnknownModelError("zeta-lattice needs a 'beta' parameter")
        model = _zeta_model(float(params["beta"]))
    elif name == "finite":
        model = _finite_model(params.get("label", "finite"), params["values"], params["probs"])
    else:
        raise UnknownModelError(f"Unknown scenery '{name}', expected one of {BUILTIN_SCENERIES}")
    validate(model.attraction)
    logging.debug(f"Scenery {model.name}: attraction {model.attraction}, d0={model.d0}, C_xi={model.tail_constant:.4g}")
    return model


@lru_cache(maxsize=16)
def _zeta_law(beta: float, table_size: int) -> IntegerTailLaw:
    return IntegerTailLaw(f"zeta-lattice({beta:g})", zeta_tail(1 + beta), table_size)


def _beta_of(model: SceneryModel) -> float:
    return model.attraction.beta


def from_uniforms(model: SceneryModel, u: np.ndarray, v: np.ndarray, settings: Settings = Settings()) -> np.ndarray:
    """Scenery values from two independent uniform arrays in (0, 1)."""
    if model.is_finite:
        cumulative = np.cumsum(model.probs)
        index = np.minimum(np.searchsorted(cumulative, u, side="right"), len(model.values) - 1)
        return np.asarray(model.values, dtype=np.float64)[index]
    if model.name == "gaussian":
        return special.ndtri(u)
    if model.name == "cauchy-cont":
        return np.tan(np.pi * (u - 0.5))
    if model.name.startswith("zeta-lattice"):
        law = _zeta_law(_beta_of(model), settings.tail_table_size)
        return np.where(v < 0.5, -1.0, 1.0) * law.magnitudes(u)
    raise UnknownModelError(f"No sampler for scenery '{model.name}'")


def sample(model: SceneryModel, rng: np.random.Generator, size: int, settings: Settings = Settings()) -> np.ndarray:
    """i.i.d. draws from a random stream (not site keyed)."""
    u = np.maximum(rng.random(size), _MIN_UNIFORM)
    v = rng.random(size)
    return from_uniforms(model, u, v, settings)


class SceneryField:
    """
    Lazily realised scenery: the value at a site is a keyed hash of (key, site),
    so it does not depend on query order. Fields are owned by one trial.
    """
    def __init__(self, model: SceneryModel, key: int, dimension: int, settings: Settings = Settings(), scale: float = 1.0):
        self.model = model
        self.key = int(key)
        self.dimension = dimension
        self.settings = settings
        self.scale = scale
        self.memo: Dict[Tuple[int, ...], float] = {}

    def values_at(self, sites: np.ndarray) -> np.ndarray:
        """Values at packed site keys."""
        u = site_uniforms(self.key, sites, draw=0)
        v = site_uniforms(self.key, sites, draw=1)
        values = from_uniforms(self.model, u, v, self.settings)
        return values if self.scale == 1.0 else self.scale * values

    def xi_at(self, site: Sequence[int]) -> float:
        site = tuple(int(c) for c in site)
        if site not in self.memo:
            key = pack_sites(np.asarray([site]), self.dimension)
            self.memo[site] = float(self.values_at(key)[0])
        return self.memo[site]

    def scaled(self, factor: float) -> "SceneryField":
        return SceneryField(self.model, self.key, self.dimension, self.settings, self.scale * factor)


def tail_probability(model: SceneryModel, t: float, strict: bool = False) -> float:
    """Exact P(|xi| >= t), or P(|xi| > t) when strict."""
    if t < 0 or (t == 0 and not strict):
        return 1.0
    if model.is_finite:
        magnitudes = np.abs(np.asarray(model.values, dtype=np.float64))
        mask = magnitudes > t if strict else magnitudes >= t
        return float(np.asarray(model.probs)[mask].sum())
    if model.name == "gaussian":
        return float(special.erfc(t / math.sqrt(2)))
    if model.name == "cauchy-cont":
        return 1.0 - 2.0 * math.atan(t) / math.pi
    if model.name.startswith("zeta-lattice"):
        first = math.floor(t) + 1 if strict else max(math.ceil(t), 1)
        return float(special.zeta(1 + _beta_of(model), first) / model.zeta_norm)
    raise UnknownModelError(f"No tail for scenery '{model.name}'")


def scenery_cf(model: SceneryModel, u: float, terms: int = 1_000_000) -> complex:
    """Characteristic function of xi; the zeta-lattice series is summed over |k| <= terms."""
    if model.is_finite:
        return complex(np.sum(np.asarray(model.probs) * np.exp(1j * u * np.asarray(model.values, dtype=np.float64))))
    if model.name == "gaussian":
        return complex(math.exp(-u * u / 2))
    if model.name == "cauchy-cont":
        return complex(math.exp(-abs(u)))
    if model.name.startswith("zeta-lattice"):
        k = np.arange(1, terms + 1, dtype=np.float64)
        return complex(np.sum(np.cos(u * k) * k ** (-1 - _beta_of(model))) / model.zeta_norm)
    raise UnknownModelError(f"No characteristic function for scenery '{model.name}'")


def support_point(model: SceneryModel) -> int:
    """Any point of the support; all support points agree modulo d0."""
    if not model.is_lattice:
        raise ValueError(f"Scenery {model.name} is not lattice")
    return int(model.values[0]) if model.is_finite else 1


def admissible_residue(model: SceneryModel, n: int) -> int:
    """Residue r with Z_n in r + d0 Z almost surely."""
    return (n * support_point(model)) % model.d0


def tail_check(
    model: SceneryModel,
    sample_count: int,
    t_grid: Sequence[float],
    rng: np.random.Generator,
    settings: Settings = Settings(),
) -> TailReport:
    """Empirical P(|xi| >= t) against C_xi t^(-beta), flagged beyond 3 binomial standard errors."""
    if sample_count < 10_000:
        raise ValueError(f"tail_check needs at least 10^4 samples, got {sample_count}")
    magnitudes = np.abs(sample(model, rng, sample_count, settings))
    report = TailReport(scenery=model.name, sample_count=sample_count)
    for t in t_grid:
        frequency = float(np.mean(magnitudes >= t))
        bound = model.tail_constant * t ** (-_beta_of(model))
        p = min(bound, 1.0)
        stderr = math.sqrt(p * (1 - p) / sample_count)
        flagged = frequency > bound + 3 * stderr
        if flagged:
            logging.warning(f"Tail bound violated for {model.name} at t={t}: {frequency:.4g} > {bound:.4g}")
        report.rows.append(TailRow(t=float(t), frequency=frequency, stderr=stderr, bound=bound, flagged=flagged))
    return report


def truncated_mean_check(
    model: SceneryModel,
    sample_count: int,
    t_grid: Sequence[float],
    rng: np.random.Generator,
    settings: Settings = Settings(),
) -> List[Tuple[float, float, float]]:
    """(t, mean of xi 1{|xi| <= t}, standard error) for the beta = 1 symmetry condition."""
    values = sample(model, rng, sample_count, settings)
    out = []
    for t in t_grid:
        truncated = np.where(np.abs(values) <= t, values, 0.0)
        out.append((float(t), float(truncated.mean()), float(truncated.std(ddof=1) / math.sqrt(sample_count))))
    return out
