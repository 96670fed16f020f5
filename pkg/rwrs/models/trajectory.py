from dataclasses import dataclass
from typing import Tuple
from .local_time import LocalTimeField

@dataclass(frozen=True)
class TrajectorySample:
    n: int
    checkpoint_times: Tuple[float, ...]
    z_values: Tuple[float, ...]
    max_abs_scenery_on_path: float
    local_time: LocalTimeField
    checkpoint_steps: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.z_values) != len(self.checkpoint_times):
            raise ValueError("One Z value is required per checkpoint time")

    def increments(self) -> Tuple[float, ...]:
        """Z_[n t_i] - Z_[n t_(i-1)] with t_0 = 0."""
        previous = 0.0
        out = []
        for z in self.z_values:
            out.append(z - previous)
            previous = z
        return tuple(out)
