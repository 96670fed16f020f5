import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional
from rwrs.core import ConfigError, Result
from rwrs.core.runner import ExperimentRunner
from rwrs.models import ExperimentKind, ExperimentSpec, OutputFormat
from rwrs.plans import ReportEmitter, Preset, find_preset, parse_presets

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def load_spec(file_path: str) -> Dict[str, Any]:
    with open(file_path) as f:
        spec_data = json.load(f)
    if not isinstance(spec_data, dict):
        raise ConfigError(f"{file_path} must hold a JSON object with ExperimentSpec fields")
    return spec_data


def load_presets(file_path: str = os.path.join(DATA_DIR, "presets.json")) -> Dict[str, Dict[ExperimentKind, Preset]]:
    with open(file_path) as f:
        presets_data = json.load(f)
    return parse_presets(presets_data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rwrs", description="Monte Carlo checks for random walks in random scenery")
    subparsers = parser.add_subparsers(dest="experiment", required=True)
    for kind in ExperimentKind:
        sub = subparsers.add_parser(kind.value, help=f"run the {kind.value} experiment")
        sub.add_argument("--config", help="JSON file with ExperimentSpec fields")
        sub.add_argument("--seed", type=int, help="master seed (64-bit)")
        sub.add_argument("--workers", type=int, help="worker processes")
        sub.add_argument("--preset", help="trial budget: quick, standard or deep")
        sub.add_argument("--out", help="output file (stdout when omitted)")
        sub.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    return parser


def build_spec(args: argparse.Namespace) -> ExperimentSpec:
    """Config file values, overridden by the preset, overridden by explicit flags."""
    spec_data: Dict[str, Any] = load_spec(args.config) if args.config else {}
    if spec_data.get("experiment", args.experiment) != args.experiment:
        raise ConfigError(f"Config is for '{spec_data['experiment']}' but '{args.experiment}' was requested")
    spec_data["experiment"] = args.experiment

    preset_name = args.preset or spec_data.get("preset")
    if preset_name:
        preset = find_preset(load_presets(), preset_name, ExperimentKind(args.experiment))
        spec_data = preset.apply(spec_data)
    if args.seed is not None:
        spec_data["seed"] = args.seed
    if args.workers is not None:
        spec_data["workers"] = args.workers
    try:
        return ExperimentSpec.from_dict(spec_data)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"Invalid experiment configuration: {error}") from error


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = build_spec(args)
        runner = ExperimentRunner(spec)
    except (ConfigError, OSError, json.JSONDecodeError, ValueError) as error:
        logging.error(f"Configuration error: {error}")
        return Result.CONFIG_ERROR.exit_code

    result = runner.run()
    report = runner.get_report()
    text = ReportEmitter(report).emit(OutputFormat(args.format), args.out)
    if args.out:
        report.display()
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(run())
