from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from .base import LatticeCase

@dataclass(frozen=True)
class FunctionalReport:
    gamma: float
    thetas: Tuple[float, ...]
    times: Tuple[float, ...]
    L_value: float
    L_signed_value: float
    V_value: float


@dataclass(frozen=True)
class OmegaWitness:
    """
    Outcome of the Omega_n(gamma) event test.

    range_ratio = R_n / (n / (loglog n)^(1/4)) and max_ratio = N*_n / n^gamma;
    the event holds iff both are <= 1. The min_* flags report the consequences
    N*_n >= (loglog n)^(1/4) and V_n >= n^(1 - gamma (1-beta)_+), checked only
    when the event holds (None otherwise).
    """
    holds: bool
    range_ratio: float
    max_ratio: float
    min_max_count_ok: Optional[bool] = None
    min_v_ok: Optional[bool] = None
    v_value: Optional[float] = None
    v_lower_bound: Optional[float] = None


@dataclass(frozen=True)
class LatticeEstimate:
    case: LatticeCase
    requested_point: int
    target_point: int
    estimate: float
    stderr: float
    vanishing_frequency: float = 0.0


@dataclass(frozen=True)
class IntervalEstimate:
    lower: float
    upper: float
    estimate: float
    stderr: float


@dataclass(frozen=True)
class TailRow:
    t: float
    frequency: float
    stderr: float
    bound: float
    flagged: bool


@dataclass
class TailReport:
    scenery: str
    sample_count: int
    rows: List[TailRow] = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return any(row.flagged for row in self.rows)
