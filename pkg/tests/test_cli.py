import json
import pytest
from rwrs.core import Result
from rwrs.main import build_parser, build_spec, load_presets, run
from rwrs.models import ExperimentKind, ExperimentSpec


def _write(tmp_path, data, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_run_writes_csv_with_digest(tmp_path):
    config = _write(tmp_path, {"experiment": "oracle-check", "walk": "srw1d", "scenery": "rademacher", "n_grid": [2, 3], "trials": 300})
    out = tmp_path / "out.csv"
    assert run(["oracle-check", "--config", config, "--seed", "5", "--out", str(out)]) == Result.RAN.exit_code
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# config_digest=")
    assert lines[1] == "experiment,n,trials,estimate,stderr,target,target_source,seed"
    assert len(lines) == 4


def test_run_writes_json(tmp_path):
    config = _write(tmp_path, {"walk": "srw1d", "scenery": "rademacher", "n_grid": [2], "trials": 100})
    out = tmp_path / "out.json"
    assert run(["oracle-check", "--config", config, "--out", str(out), "--format", "json"]) == 0
    payload = json.loads(out.read_text())
    assert payload["experiment"] == "oracle-check"
    assert payload["metadata"]["seed"] == 1


def test_statistical_flag_exit_code(tmp_path):
    config = _write(tmp_path, {"n_grid": [100, 200], "trials": 4, "bracket": [10.0, 20.0]})
    out = tmp_path / "out.csv"
    assert run(["range", "--config", config, "--out", str(out)]) == Result.STATISTICAL_FLAG.exit_code


@pytest.mark.parametrize("data", [
    {"n_grid": [100], "unknown_field": 1},
    {"n_grid": [300, 100]},
    {"experiment": "tech1", "n_grid": [100]},
    {"n_grid": [100], "seed": -1},
    {"n_grid": [100], "walk": "levy3d"},
])
def test_config_errors_exit_with_one(tmp_path, data):
    config = _write(tmp_path, data)
    assert run(["range", "--config", config]) == Result.CONFIG_ERROR.exit_code


def test_missing_config_file_is_a_config_error(tmp_path):
    assert run(["range", "--config", str(tmp_path / "absent.json")]) == Result.CONFIG_ERROR.exit_code


def test_preset_fills_budget_and_flags_override(tmp_path):
    config = _write(tmp_path, {"n_grid": [50], "trials": 3, "seed": 11})
    args = build_parser().parse_args(["range", "--config", config, "--preset", "quick", "--seed", "99", "--workers", "2"])
    spec = build_spec(args)
    assert spec.n_grid == [1000, 10_000, 100_000]
    assert spec.trials == 20
    assert spec.seed == 99
    assert spec.workers == 2
    assert spec.preset == "quick"


def test_every_experiment_has_every_preset():
    presets = load_presets()
    for name in ("quick", "standard", "deep"):
        assert set(presets[name]) == set(ExperimentKind)


def test_unknown_preset_is_a_config_error():
    assert run(["range", "--preset", "weekly"]) == Result.CONFIG_ERROR.exit_code


def test_shipped_configs_are_valid():
    import glob
    import os
    from rwrs.main import DATA_DIR, load_spec
    paths = glob.glob(os.path.join(DATA_DIR, "configs", "*.json"))
    assert len(paths) >= len(ExperimentKind)
    kinds = set()
    for path in paths:
        spec = ExperimentSpec.from_dict(load_spec(path))
        kinds.add(spec.kind)
    assert kinds == set(ExperimentKind)


def test_fdd_ks_limit_from_config_sets_flag_exit_code(tmp_path):
    config = _write(tmp_path, {"n_grid": [200], "trials": 50, "ks_max": 1e-9})
    out = tmp_path / "out.csv"
    assert run(["fdd", "--config", config, "--out", str(out)]) == Result.STATISTICAL_FLAG.exit_code
