from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple
import numpy as np

_LOW32 = np.int64(0xFFFFFFFF)


def pack_sites(points: np.ndarray, dimension: int) -> np.ndarray:
    """
    Pack lattice points into int64 keys.
    d=1: the coordinate itself; d=2: two signed 32-bit halves.
    """
    points = np.asarray(points, dtype=np.int64)
    if dimension == 1:
        return points.reshape(-1).copy()
    points = points.reshape(-1, 2)
    return (points[:, 0] << np.int64(32)) | (points[:, 1] & _LOW32)


def unpack_sites(keys: np.ndarray, dimension: int) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    if dimension == 1:
        return keys.reshape(-1, 1)
    x = keys >> np.int64(32)
    y = (keys & _LOW32).astype(np.uint32).astype(np.int32).astype(np.int64)
    return np.stack([x, y], axis=1)


@dataclass(frozen=True)
class CheckpointIncrement:
    """Visits made during steps [start, stop) as indices into the parent field's sites."""
    start: int
    stop: int
    site_index: np.ndarray
    counts: np.ndarray


@dataclass(frozen=True)
class LocalTimeField:
    """
    Occupation counts N_n(y) of a path, stored as sorted packed keys and counts.

    Invariants: counts.sum() == n, every count is positive, R_n == len(sites).
    """
    dimension: int
    n: int
    sites: np.ndarray
    counts: np.ndarray
    increments: Tuple[CheckpointIncrement, ...] = ()
    _lookup: Dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def range_size(self) -> int:
        return int(self.sites.size)

    @property
    def max_count(self) -> int:
        return int(self.counts.max()) if self.counts.size else 0

    def count_at(self, point: Sequence[int]) -> int:
        if not self._lookup:
            self._lookup.update({int(k): i for i, k in enumerate(self.sites)})
        key = int(pack_sites(np.asarray([point]), self.dimension)[0])
        index = self._lookup.get(key)
        return 0 if index is None else int(self.counts[index])

    def counts_until(self, checkpoint: int) -> np.ndarray:
        """Dense counts N_k(y) over `sites` at the checkpoint-th increment boundary."""
        dense = np.zeros(self.sites.size, dtype=np.int64)
        for increment in self.increments[:checkpoint + 1]:
            dense[increment.site_index] += increment.counts
        return dense

    def points(self) -> np.ndarray:
        return unpack_sites(self.sites, self.dimension)

    def as_dict(self) -> Dict[Tuple[int, ...], int]:
        return {tuple(int(c) for c in p): int(k) for p, k in zip(self.points(), self.counts)}

    @classmethod
    def from_counts(cls, counts: Dict[Tuple[int, ...], int], dimension: int) -> "LocalTimeField":
        """Build a field from an explicit site -> count map (one increment covering all steps)."""
        items = sorted(
            ((int(pack_sites(np.asarray([p]), dimension)[0]), int(c)) for p, c in counts.items() if c > 0)
        )
        sites = np.array([k for k, _ in items], dtype=np.int64)
        values = np.array([c for _, c in items], dtype=np.int64)
        n = int(values.sum())
        increment = CheckpointIncrement(0, n, np.arange(sites.size), values)
        return cls(dimension=dimension, n=n, sites=sites, counts=values, increments=(increment,))

