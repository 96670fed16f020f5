class RwrsError(ValueError):
    """Base class for every domain error raised by the toolkit."""


class StableParamsError(RwrsError):
    pass


class QuadratureError(RwrsError):
    pass


class UnknownModelError(RwrsError):
    pass


class ParityError(RwrsError):
    """Raised when a lattice target lies outside the admissible residue class."""


class OracleExplosionError(RwrsError):
    pass


class DegenerateStatisticError(RwrsError):
    pass


class ConfigError(RwrsError):
    pass
