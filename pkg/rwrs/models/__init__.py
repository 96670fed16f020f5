from .base import SceneryKind, ExperimentKind, OutputFormat, LatticeCase, StreamRole
from .settings import Settings
from .stable_params import StableParams, LimitLaw
from .walk_model import WalkModel
from .scenery_model import SceneryModel
from .local_time import LocalTimeField, CheckpointIncrement, pack_sites, unpack_sites
from .path import Path
from .trajectory import TrajectorySample
from .functional import FunctionalReport, OmegaWitness, LatticeEstimate, IntervalEstimate, TailRow, TailReport
from .experiment_spec import ExperimentSpec
from .report import ReportRow, ExperimentReport, CSV_COLUMNS

__all__ = [
    'SceneryKind', 'ExperimentKind', 'OutputFormat', 'LatticeCase', 'StreamRole',
    'Settings', 'StableParams', 'LimitLaw', 'WalkModel', 'SceneryModel',
    'LocalTimeField', 'CheckpointIncrement', 'pack_sites', 'unpack_sites',
    'Path', 'TrajectorySample',
    'FunctionalReport', 'OmegaWitness', 'LatticeEstimate', 'IntervalEstimate', 'TailRow', 'TailReport',
    'ExperimentSpec', 'ReportRow', 'ExperimentReport', 'CSV_COLUMNS'
]
