from .result import Result
from .errors import (
    RwrsError, StableParamsError, QuadratureError, UnknownModelError,
    ParityError, OracleExplosionError, DegenerateStatisticError, ConfigError,
)

__all__ = [
    'Result',
    'RwrsError',
    'StableParamsError',
    'QuadratureError',
    'UnknownModelError',
    'ParityError',
    'OracleExplosionError',
    'DegenerateStatisticError',
    'ConfigError',
]

# Optional: Package-level documentation
"""
Core application components including:
- ExperimentRunner (rwrs.core.runner): Monte Carlo engine
- Result: Run outcome enumerations carrying CLI exit codes
- errors: Domain exception hierarchy
"""
