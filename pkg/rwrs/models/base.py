from enum import Enum

class SceneryKind(Enum):
    LATTICE = "lattice"
    NONLATTICE = "nonlattice"

class ExperimentKind(Enum):
    FDD = "fdd"
    LLT_LATTICE = "llt-lattice"
    LLT_NONLATTICE = "llt-nonlattice"
    TECH1 = "tech1"
    RANGE = "range"
    OMEGA = "omega"
    NONTIGHT = "nontight"
    ORACLE_CHECK = "oracle-check"
    STABLE_SELFTEST = "stable-selftest"
    BORNE = "borne"
    SUP = "sup"
    VN_SCALE = "vn-scale"

class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"

class LatticeCase(Enum):
    POSITIVE = "positive"
    VANISHING = "vanishing"

class StreamRole(Enum):
    # Walk and scenery randomness must come from disjoint streams.
    WALK = 0
    SCENERY = 1
    AUXILIARY = 2
