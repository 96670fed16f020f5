from dataclasses import dataclass
from typing import Tuple
import numpy as np
from .local_time import LocalTimeField

@dataclass(frozen=True)
class Path:
    """
    A simulated walk S_0, ..., S_{n-1}.

    visit_index[k] is the index of S_k in local_time.sites; S_n is not stored.
    checkpoints are step counts k_1 < ... < k_m <= n, and
    positions_at_checkpoints[j] is S_{k_j - 1} (the last counted position).
    """
    n: int
    checkpoints: Tuple[int, ...]
    positions_at_checkpoints: Tuple[Tuple[int, ...], ...]
    local_time: LocalTimeField
    visit_index: np.ndarray

    @property
    def dimension(self) -> int:
        return self.local_time.dimension
