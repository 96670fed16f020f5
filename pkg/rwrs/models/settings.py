# models/settings.py
from dataclasses import dataclass

@dataclass(frozen=True)
class Settings:
    """
    Numerical configuration shared by the services.

    Attributes:
        density_tol: Absolute error target for characteristic-function inversion
        cdf_grid_points: Grid size of the interpolated CDF used by KS distances
        oracle_term_guard: Largest number of enumeration terms the exact oracle accepts
        sigma_band: Width (in standard errors) of oracle acceptance bands
        cf_chunk: Samples processed per block when evaluating empirical CFs
        tail_table_size: Tabulated support size of discrete heavy-tailed samplers
        cauchy_oracle_tol: Allowed gap between tanh(pi) and the numerical CF oracle
        worker_chunk: Trials handed to a worker process per task
    """
    density_tol: float = 1e-6
    cdf_grid_points: int = 801
    oracle_term_guard: int = 10**8
    sigma_band: float = 4.0
    cf_chunk: int = 65536
    tail_table_size: int = 100_000
    cauchy_oracle_tol: float = 1e-3
    worker_chunk: int = 64

    def __post_init__(self):
        """Validate configuration values."""
        if self.density_tol <= 0:
            raise ValueError("Density tolerance must be positive")
        if self.cdf_grid_points < 16:
            raise ValueError("CDF grid needs at least 16 points")
        if self.oracle_term_guard <= 0:
            raise ValueError("Oracle term guard must be positive")
        if self.sigma_band <= 0:
            raise ValueError("Sigma band must be positive")
        if self.cf_chunk <= 0 or self.worker_chunk <= 0:
            raise ValueError("Chunk sizes must be positive")
        if self.tail_table_size < 16:
            raise ValueError("Tail table must hold at least 16 entries")
