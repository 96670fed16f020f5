import json
import math
import pytest
from rwrs.core import ConfigError, Result
from rwrs.core.runner import ExperimentRunner
from rwrs.experiments import BorneExperiment, MaxLocalTimeExperiment, OracleCheckExperiment
from rwrs.experiments.oracle_check_experiment import IMPOSSIBLE_SCORE
from rwrs.models import ExperimentReport, ExperimentSpec, LatticeCase
from rwrs.plans import ReportEmitter
from rwrs.services.stable_law import limit_constant
from tests.utils import assert_within_stderr, validate_report


def _run(**fields):
    spec = ExperimentSpec(**fields)
    runner = ExperimentRunner(spec)
    result = runner.run()
    report = runner.get_report()
    validate_report(report, spec)
    return result, report


def test_oracle_check_matches_enumeration():
    result, report = _run(experiment="oracle-check", walk="srw1d", scenery="rademacher", n_grid=[1, 2, 3], trials=4000, seed=1)
    assert result == Result.RAN
    for row in report.rows:
        assert row.passed
        assert row.details["off_support"] == 0
    assert report.row_for(3).details["pmf"]["3"] == "3/16"
    assert report.row_for(2).details["pmf"]["0"] == "1/2"


def test_stable_selftest_passes_on_moderate_samples():
    result, report = _run(experiment="stable-selftest", n_grid=[20_000], trials=2, seed=3)
    row = report.rows[0]
    assert row.passed
    assert row.details["total_samples"] == 40_000
    gaussian = row.details["laws"]["[2.0, 0.5, 0.0]"]
    assert gaussian["density_at_0"] == pytest.approx(0.398942, abs=1e-5)


def test_tech1_unit_exponent_is_exact():
    result, report = _run(experiment="tech1", walk="srw2d", scenery="gaussian", n_grid=[500, 2000], trials=5, gamma=1.0)
    assert result == Result.RAN
    for row in report.rows:
        assert row.estimate == 1.0
        assert row.stderr == 0.0
        assert row.target == pytest.approx(1.0)
        assert row.details["signed_estimate"] == 1.0


def test_tech1_gaussian_target_is_recomputed():
    _, report = _run(experiment="tech1", walk="lazy2d", scenery="gaussian", n_grid=[1000], trials=5, gamma=2.0)
    assert report.rows[0].target == pytest.approx(2 / (math.pi * 0.5))


def test_range_experiment_targets_pi_a():
    _, report = _run(experiment="range", walk="srw2d", scenery="gaussian", n_grid=[1000, 10_000], trials=10)
    for row in report.rows:
        assert row.target == pytest.approx(math.pi)
        assert 1.0 < row.estimate < math.pi


def test_range_flags_an_unreachable_bracket():
    result, report = _run(experiment="range", n_grid=[100, 200], trials=4, bracket=[10.0, 20.0])
    assert result == Result.STATISTICAL_FLAG
    assert report.rows[-1].passed is False
    assert report.flagged


def test_fdd_gaussian_rows_carry_variance_and_ks():
    _, report = _run(experiment="fdd", walk="srw2d", scenery="gaussian", n_grid=[1000], trials=300)
    row = report.rows[0]
    assert row.target == pytest.approx(2 / math.pi)
    assert 0.3 < row.estimate < 1.2
    assert 0.0 <= row.details["ks_distance"] <= 1.0


def test_fdd_two_checkpoints_report_cf_grid():
    _, report = _run(
        experiment="fdd", walk="srw2d", scenery="cauchy-cont", n_grid=[500], trials=200,
        checkpoint_times=[0.5, 1.0], thetas=[1.0, -1.0],
    )
    row = report.rows[0]
    assert row.target == pytest.approx(math.exp(-1.0))
    assert 0.0 <= row.details["cf_grid_max_deviation"] <= 2.0


def test_llt_lattice_parity_and_cases():
    _, odd = _run(experiment="llt-lattice", walk="srw2d", scenery="rademacher", n_grid=[101], trials=300)
    row = odd.rows[0]
    assert row.details["parity_violations"] == 0
    assert row.details["case"] == LatticeCase.VANISHING.value
    assert row.details["vanishing_frequency"] == 0.0
    assert row.passed is not False

    _, even = _run(experiment="llt-lattice", walk="srw2d", scenery="rademacher", n_grid=[100], trials=300)
    assert even.rows[0].details["case"] == LatticeCase.POSITIVE.value
    assert even.rows[0].target == pytest.approx(0.5, abs=1e-5)


def test_llt_nonlattice_targets_limit_density():
    _, report = _run(experiment="llt-nonlattice", walk="srw2d", scenery="cauchy-cont", n_grid=[1000], trials=200)
    assert report.rows[0].target == pytest.approx(1 / math.pi, abs=1e-5)


def test_omega_consequences_never_fail():
    _, report = _run(experiment="omega", walk="srw2d", scenery="gaussian", n_grid=[1000], trials=20)
    assert report.rows[0].details["consequence_violations"] == 0
    assert report.rows[0].target == 1.0


def test_nontight_matches_conditional_max_law():
    _, report = _run(experiment="nontight", walk="srw2d", scenery="cauchy-cont", n_grid=[200], trials=400, epsilon=0.5)
    row = report.rows[0]
    assert row.passed
    assert 0.0 < row.target < 1.0


def test_borne_and_scale_targets():
    _, borne = _run(experiment="borne", walk="srw2d", scenery="gaussian", n_grid=[1000], trials=10)
    assert borne.rows[0].target == pytest.approx(math.pi / 2)
    assert borne.rows[0].details["holder_violations"] == 0

    _, scale = _run(experiment="vn-scale", walk="srw2d", scenery="zeta-lattice(1.5)", n_grid=[1000], trials=5)
    assert scale.rows[0].target == pytest.approx(1 / limit_constant(1.5, 1.0))
    assert 0.0 <= scale.rows[0].details["exponential_ks"] <= 1.0


def test_sup_reports_max_local_time_ratio():
    _, report = _run(experiment="sup", walk="srw2d", scenery="gaussian", n_grid=[1000], trials=5, rho=0.25)
    row = report.rows[0]
    assert row.target == 0.0
    assert 0.0 < row.estimate <= 1000 / 1000**0.25


@pytest.mark.parametrize("workers", [4, 16])
def test_reports_do_not_depend_on_worker_count(workers):
    spec = dict(experiment="range", walk="srw2d", scenery="gaussian", n_grid=[100, 1000], trials=20, seed=42)
    _, serial = _run(**spec, workers=1)
    _, parallel = _run(**spec, workers=workers)
    serial_body = ReportEmitter(serial).to_csv().splitlines()[1:]
    parallel_body = ReportEmitter(parallel).to_csv().splitlines()[1:]
    assert serial_body == parallel_body


def test_same_seed_gives_identical_csv():
    spec = dict(experiment="oracle-check", walk="srw1d", scenery="rademacher", n_grid=[2, 3], trials=500, seed=9)
    _, first = _run(**spec)
    _, second = _run(**spec)
    assert ReportEmitter(first).to_csv() == ReportEmitter(second).to_csv()


@pytest.mark.parametrize("fields", [
    dict(experiment="llt-nonlattice", scenery="rademacher"),
    dict(experiment="llt-lattice", scenery="gaussian"),
    dict(experiment="range", walk="srw1d"),
    dict(experiment="oracle-check", walk="srw1d", scenery="rademacher", n_grid=[13]),
    dict(experiment="oracle-check", walk="cauchy1d", scenery="rademacher", n_grid=[3]),
    dict(experiment="omega", n_grid=[10]),
])
def test_invalid_model_combinations_are_config_errors(fields):
    with pytest.raises(ConfigError):
        ExperimentRunner(ExperimentSpec(**fields))


@pytest.mark.slow
def test_oracle_equivalence_acceptance():
    result, report = _run(
        experiment="oracle-check", walk="srw1d", scenery="rademacher", n_grid=[1, 2, 3, 5, 8], trials=1_000_000, seed=1
    )
    assert result == Result.RAN


@pytest.mark.slow
def test_range_acceptance():
    _, report = _run(experiment="range", walk="srw2d", n_grid=[10_000, 100_000, 1_000_000], trials=100, seed=1)
    assert not report.flags
    assert 2.0 <= report.rows[-1].estimate <= math.pi


@pytest.mark.slow
def test_tech1_acceptance():
    _, report = _run(experiment="tech1", walk="srw2d", n_grid=[10_000, 100_000, 1_000_000], trials=50, gamma=2.0, seed=1)
    assert 0.4 <= report.rows[-1].estimate <= 1.0
    assert_within_stderr(report.rows[-1].estimate, report.rows[-1].stderr, 2 / math.pi, floor=0.3)


def test_fdd_flags_an_unreachable_ks_limit():
    result, report = _run(experiment="fdd", walk="srw2d", scenery="gaussian", n_grid=[100, 200], trials=100, ks_max=1e-9)
    assert result == Result.STATISTICAL_FLAG
    assert report.rows[0].passed is None
    assert report.rows[-1].passed is False


def test_fdd_flags_an_unreachable_cf_grid_tolerance():
    result, report = _run(
        experiment="fdd", walk="srw2d", scenery="gaussian", n_grid=[200], trials=100,
        checkpoint_times=[0.5, 1.0], thetas=[1.0, -0.5], cf_tolerance=1e-9,
    )
    assert result == Result.STATISTICAL_FLAG
    assert report.rows[0].passed is False


def test_fdd_passes_within_generous_limits():
    result, report = _run(
        experiment="fdd", walk="srw2d", scenery="gaussian", n_grid=[200], trials=100,
        checkpoint_times=[0.5, 1.0], thetas=[1.0, -0.5], ks_max=1.0, cf_tolerance=2.5,
    )
    assert result == Result.RAN
    assert report.rows[0].passed is True


@pytest.mark.parametrize("fields", [
    dict(ks_max=0.0),
    dict(cf_tolerance=-0.05),
    dict(checkpoint_times=[-0.5, 1.0], thetas=[1.0, 1.0]),
    dict(checkpoint_times=[0.0], thetas=[1.0]),
])
def test_invalid_fdd_fields(fields):
    with pytest.raises(ValueError):
        ExperimentSpec(experiment="fdd", **fields)


def test_fdd_accepts_a_checkpoint_at_time_zero():
    _, report = _run(
        experiment="fdd", walk="srw2d", scenery="gaussian", n_grid=[200], trials=50,
        checkpoint_times=[0.0, 1.0], thetas=[1.0, 1.0],
    )
    assert report.rows[0].target == pytest.approx(2 / math.pi)


def test_borne_trend_flags_only_a_significant_rise():
    borne = BorneExperiment(ExperimentSpec(experiment="borne", n_grid=[100, 1000, 10_000], trials=10))
    target = math.pi / 2

    def rows(estimates, stderr):
        return [borne.make_row(n, e, stderr, target, "c^(-beta)") for n, e in zip([100, 1000, 10_000], estimates)]

    assert borne.trend_flags(rows([1.0, 1.5, 2.0], 0.01))
    assert borne.review(rows([1.0, 1.5, 2.0], 0.01))
    assert borne.trend_flags(rows([2.0, 1.8, 1.7], 0.01)) == []
    assert borne.trend_flags(rows([1.0, 1.01, 1.02], 0.01)) == []


def test_sup_trend_flags_a_ratio_that_does_not_fall():
    sup = MaxLocalTimeExperiment(ExperimentSpec(experiment="sup", n_grid=[1000, 10_000], trials=5))
    falling = [sup.make_row(n, e, 0.1, 0.0, "N*_n = o(n^rho)") for n, e in [(1000, 3.0), (10_000, 2.5)]]
    rising = [sup.make_row(n, e, 0.1, 0.0, "N*_n = o(n^rho)") for n, e in [(1000, 3.0), (10_000, 3.2)]]
    assert sup.trend_flags(falling) == []
    assert sup.trend_flags(rising)


def test_oracle_check_scores_impossible_outcomes_finitely():
    spec = ExperimentSpec(experiment="oracle-check", walk="srw1d", scenery="rademacher", n_grid=[2], trials=4)
    oracle = OracleCheckExperiment(spec)
    row = oracle.summarize(2, [{"z": 5}] * 4)
    assert row.estimate == IMPOSSIBLE_SCORE
    assert row.details["off_support"] == 4
    assert row.details["impossible"] is True
    assert row.passed is False

    text = ReportEmitter(ExperimentReport(experiment="oracle-check", rows=[row])).to_json()

    def reject(constant):
        raise AssertionError(f"non-standard JSON constant {constant}")

    assert json.loads(text, parse_constant=reject)["rows"][0]["estimate"] == IMPOSSIBLE_SCORE
