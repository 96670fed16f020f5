"""
Reproducible random streams.

Every trial draws from Philox (a counter-based generator) seeded by
SeedSequence(master seed, spawn_key=(trial, role)), so the streams of
different trials and roles never overlap and do not depend on scheduling.
Scenery values are a keyed hash of (field key, site, draw), which makes a
realised field a pure function of its seed and the site.
"""
import numpy as np
from rwrs.models import StreamRole

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO_POW_53 = float(2**53)


def seed_sequence(seed: int, trial: int, role: StreamRole) -> np.random.SeedSequence:
    return np.random.SeedSequence(entropy=int(seed), spawn_key=(int(trial), role.value))


def stream(seed: int, trial: int, role: StreamRole) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed_sequence(seed, trial, role)))


def field_key(seed: int, trial: int) -> int:
    """64-bit key of the scenery field owned by one trial."""
    return int(seed_sequence(seed, trial, StreamRole.SCENERY).generate_state(1, np.uint64)[0])


def _splitmix(z: np.ndarray) -> np.ndarray:
    z = z + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def site_uniforms(key: int, sites: np.ndarray, draw: int = 0) -> np.ndarray:
    """
    Uniforms in the open interval (0, 1), one per packed site key.

    The value depends only on (key, site, draw).
    """
    sites = np.ascontiguousarray(np.asarray(sites, dtype=np.int64).reshape(-1))
    with np.errstate(over="ignore"):
        h = _splitmix(sites.view(np.uint64) ^ np.uint64(key))
        h = _splitmix(h + np.uint64(draw) * _GOLDEN)
    return ((h >> np.uint64(11)).astype(np.float64) + 0.5) / _TWO_POW_53
