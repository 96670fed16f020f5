from dataclasses import dataclass, field
from typing import Optional, Tuple
from .base import SceneryKind
from .stable_params import StableParams

@dataclass(frozen=True)
class SceneryModel:
    """
    Law of the i.i.d. scenery values.

    Attributes:
        name: Sampler descriptor (rademacher, gaussian, cauchy-cont, zeta-lattice, finite)
        kind: Lattice (integer valued) or strongly non-lattice
        attraction: Strictly stable law attracting n^(-1/beta) * (xi_1 + ... + xi_n)
        d0: Lattice span, None for non-lattice sceneries
        tail_constant: C_xi in P(|xi| >= t) <= C_xi t^(-beta)
        values / probs: Explicit support for finite lattice laws
        zeta_norm: Normalising constant sum_k k^(-1-beta) of the zeta-lattice law
    """
    name: str
    kind: SceneryKind
    attraction: StableParams
    tail_constant: float
    d0: Optional[int] = None
    values: Tuple[int, ...] = ()
    probs: Tuple[float, ...] = ()
    zeta_norm: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == SceneryKind.LATTICE and (self.d0 is None or self.d0 < 1):
            raise ValueError(f"Lattice scenery {self.name} needs a span d0 >= 1")
        if self.kind == SceneryKind.NONLATTICE and self.d0 is not None:
            raise ValueError(f"Non-lattice scenery {self.name} cannot carry a span")
        if not self.tail_constant > 0:
            raise ValueError("Tail constant must be positive")
        if len(self.values) != len(self.probs):
            raise ValueError("Support values and probabilities must be aligned")

    @property
    def beta(self) -> float:
        return self.attraction.beta

    @property
    def is_lattice(self) -> bool:
        return self.kind == SceneryKind.LATTICE

    @property
    def is_finite(self) -> bool:
        return len(self.values) > 0
