from dataclasses import dataclass, field
from typing import Optional, Tuple

Point = Tuple[int, ...]

@dataclass(frozen=True)
class WalkModel:
    """
    Step law of a lattice walk on Z^d.

    Finite tables list every step with its probability. Countable tables
    (cauchy1d) carry a `sampler` name instead and list only a representative
    window of steps; the named sampler draws from the full support.
    """
    label: str
    dimension: int
    steps: Tuple[Point, ...]
    probs: Tuple[float, ...]
    A: Optional[float] = None  # None for walks outside the critical case
    sampler: str = "table"
    tail_mass: float = 0.0  # probability carried outside `steps` (countable tables)
    notes: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dimension not in (1, 2):
            raise ValueError(f"Walk dimension must be 1 or 2, got {self.dimension}")
        if len(self.steps) != len(self.probs) or not self.steps:
            raise ValueError("Step table and probabilities must be non-empty and aligned")
        if any(len(s) != self.dimension for s in self.steps):
            raise ValueError("Every step must have `dimension` coordinates")
        if any(p < 0 for p in self.probs):
            raise ValueError("Step probabilities must be non-negative")
        total = sum(self.probs) + self.tail_mass
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"Step probabilities sum to {total}, expected 1")
        if self.A is not None and not self.A > 0:
            raise ValueError(f"Normalization constant A must be positive, got {self.A}")

    @property
    def is_critical(self) -> bool:
        return self.A is not None

    @property
    def is_finite(self) -> bool:
        return self.sampler == "table"
