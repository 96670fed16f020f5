from .base_experiment import Experiment
from .fdd_experiment import FddExperiment
from .llt_lattice_experiment import LatticeLltExperiment
from .llt_nonlattice_experiment import IntervalLltExperiment
from .tech1_experiment import LocalTimeFunctionalExperiment
from .range_experiment import RangeExperiment
from .omega_experiment import OmegaExperiment
from .nontight_experiment import NonTightExperiment
from .oracle_check_experiment import OracleCheckExperiment
from .stable_selftest_experiment import StableSelfTestExperiment
from .borne_experiment import BorneExperiment
from .sup_experiment import MaxLocalTimeExperiment
from .vn_scale_experiment import VnScaleExperiment

EXPERIMENTS = {
    experiment.kind: experiment
    for experiment in (
        FddExperiment, LatticeLltExperiment, IntervalLltExperiment, LocalTimeFunctionalExperiment,
        RangeExperiment, OmegaExperiment, NonTightExperiment, OracleCheckExperiment,
        StableSelfTestExperiment, BorneExperiment, MaxLocalTimeExperiment, VnScaleExperiment,
    )
}

__all__ = [
    'Experiment',
    'FddExperiment',
    'LatticeLltExperiment',
    'IntervalLltExperiment',
    'LocalTimeFunctionalExperiment',
    'RangeExperiment',
    'OmegaExperiment',
    'NonTightExperiment',
    'OracleCheckExperiment',
    'StableSelfTestExperiment',
    'BorneExperiment',
    'MaxLocalTimeExperiment',
    'VnScaleExperiment',
    'EXPERIMENTS',
]
