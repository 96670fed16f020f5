from dataclasses import dataclass

@dataclass(frozen=True)
class StableParams:
    """
    Strictly stable law with characteristic function
    exp(-|u|^beta (A1 + i A2 sgn(u))).

    At beta = 1 the A2 term is a pure location shift by -A2.
    """
    beta: float
    A1: float
    A2: float = 0.0

    @property
    def is_gaussian(self) -> bool:
        return self.beta == 2.0

    def as_list(self) -> list:
        return [self.beta, self.A1, self.A2]


@dataclass(frozen=True)
class LimitLaw:
    """Law of the rescaled limit variable scale_c * Y(1), Y(1) ~ base."""
    base: StableParams
    scale_c: float

    def __post_init__(self):
        if not self.scale_c > 0:
            raise ValueError(f"Limit scale must be positive, got {self.scale_c}")
