from dataclasses import dataclass
from typing import Any, Dict, List
from rwrs.core.errors import ConfigError
from rwrs.models import ExperimentKind

PRESET_NAMES = ("quick", "standard", "deep")

@dataclass(frozen=True)
class Preset:
    """
    Named trial budget for one experiment.

    quick runs in about a minute, standard in about ten, deep in a couple of hours.
    """
    name: str
    experiment: ExperimentKind
    n_grid: List[int]
    trials: int

    def __post_init__(self):
        if self.name not in PRESET_NAMES:
            raise ConfigError(f"Unknown preset '{self.name}', expected one of {PRESET_NAMES}")
        if not self.n_grid or list(self.n_grid) != sorted(self.n_grid):
            raise ConfigError(f"Preset {self.name}/{self.experiment.value}: n_grid must be sorted and non-empty")
        if self.trials < 1:
            raise ConfigError(f"Preset {self.name}/{self.experiment.value}: trials must be >= 1")

    def apply(self, spec_data: Dict[str, Any]) -> Dict[str, Any]:
        """Spec fields with this preset's n_grid and trials filled in."""
        return {**spec_data, "n_grid": list(self.n_grid), "trials": self.trials, "preset": self.name}


def parse_presets(data: Dict[str, Any]) -> Dict[str, Dict[ExperimentKind, Preset]]:
    presets: Dict[str, Dict[ExperimentKind, Preset]] = {}
    for name, per_experiment in data.items():
        presets[name] = {}
        for experiment, budget in per_experiment.items():
            kind = ExperimentKind(experiment)
            presets[name][kind] = Preset(name=name, experiment=kind, n_grid=budget["n_grid"], trials=budget["trials"])
    return presets


def find_preset(presets: Dict[str, Dict[ExperimentKind, Preset]], name: str, kind: ExperimentKind) -> Preset:
    if name not in presets:
        raise ConfigError(f"Unknown preset '{name}', available: {sorted(presets)}")
    if kind not in presets[name]:
        raise ConfigError(f"Preset '{name}' has no budget for {kind.value}")
    return presets[name][kind]
