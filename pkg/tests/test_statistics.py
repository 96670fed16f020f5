import math
from fractions import Fraction
import numpy as np
import pytest
from scipy import stats
from rwrs.core import DegenerateStatisticError, OracleExplosionError, ParityError
from rwrs.models import LatticeCase, LocalTimeField, Settings
from rwrs.services.rwrs_core import bn
from rwrs.services.scenery import builtin_scenery
from rwrs.services.statistics import (
    borne_moment, borne_ratio, empirical_cf, exact_small_oracle, holder_bound, interval_mass, ks_distance,
    l_stat, l_stat_target, lattice_frequencies, lattice_point_mass, omega_indicator, uniform_site_local_time,
    v_beta, vn_scale_ratio,
)
from rwrs.services.walk_engine import builtin_model, simulate

SRW1D = builtin_model("srw1d")
RADEMACHER = builtin_scenery("rademacher")
# Exact law of Z_3 for srw1d + rademacher
Z3_SAMPLES = [3] * 3 + [-3] * 3 + [1] * 5 + [-1] * 5


def _frozen(n):
    return LocalTimeField.from_counts({(0, 0): n}, 2)


def _srw2d_field(n, seed, checkpoints=()):
    return simulate(builtin_model("srw2d"), n, checkpoints, np.random.default_rng(seed)).local_time


def test_v_beta_examples():
    assert v_beta(_frozen(9), 2.0) == 81.0
    field = _srw2d_field(2000, 1)
    assert v_beta(field, 1.0) == 2000.0
    two_sites = LocalTimeField.from_counts({(0,): 2, (1,): 1}, 1)
    assert v_beta(two_sites, 0.5) == pytest.approx(math.sqrt(2) + 1)


def test_v_beta_under_merging_sites():
    split = LocalTimeField.from_counts({(0,): 3, (1,): 2}, 1)
    merged = LocalTimeField.from_counts({(0,): 5}, 1)
    assert v_beta(merged, 2.0) >= v_beta(split, 2.0)
    assert v_beta(merged, 0.5) <= v_beta(split, 0.5)


def test_l_stat_identities():
    field = _srw2d_field(5000, 2)
    unit = l_stat(field, [1.0], 1.0)
    assert unit.L_value == 1.0
    assert unit.L_signed_value == 1.0
    flipped = l_stat(field, [-2.0], 1.0)
    assert flipped.L_value == pytest.approx(2.0, rel=1e-14)
    assert flipped.L_signed_value == pytest.approx(-2.0, rel=1e-14)


def test_l_stat_homogeneity_and_sign():
    field = _srw2d_field(4000, 3, checkpoints=(1000, 4000))
    gamma = 1.7
    base = l_stat(field, [1.0, -0.5], gamma)
    scaled = l_stat(field, [3.0, -1.5], gamma)
    negated = l_stat(field, [-1.0, 0.5], gamma)
    assert scaled.L_value == pytest.approx(3.0**gamma * base.L_value, rel=1e-12)
    assert negated.L_value == pytest.approx(base.L_value, rel=1e-12)
    assert negated.L_signed_value == pytest.approx(-base.L_signed_value, rel=1e-12)
    assert base.times == (0.25, 1.0)


def test_l_stat_degenerate_and_mismatched_inputs():
    with pytest.raises(DegenerateStatisticError):
        l_stat(LocalTimeField.from_counts({(0,): 1}, 1), [1.0], 2.0)
    with pytest.raises(ValueError):
        l_stat(_frozen(10), [1.0, 1.0], 2.0)


def test_l_stat_target_for_gaussian_case():
    value, signed = l_stat_target(1.0, [1.0], [1.0], 2.0)
    assert value == pytest.approx(2 / math.pi)
    assert signed == pytest.approx(2 / math.pi)
    assert l_stat_target(1.0, [-2.0], [1.0], 1.0) == pytest.approx((2.0, -2.0))


def test_omega_fails_for_frozen_walk():
    witness = omega_indicator(_frozen(100), 0.5)
    assert not witness.holds
    assert witness.max_ratio == pytest.approx(10.0)
    assert witness.min_v_ok is None


def test_omega_consequences_on_a_typical_path():
    witness = omega_indicator(_srw2d_field(10_000, 4), 0.5, beta=1.0)
    assert witness.holds
    assert witness.min_max_count_ok
    assert witness.min_v_ok
    assert witness.v_value == 10_000.0


def test_omega_needs_large_enough_n():
    with pytest.raises(ValueError):
        omega_indicator(_frozen(10), 0.5)


def test_empirical_cf_examples():
    assert np.allclose(empirical_cf(np.zeros(10), [0.0, 1.0, 5.0]), 1.0)
    u = np.array([0.3, 1.0, 2.0])
    assert np.allclose(empirical_cf([1.0, -1.0], u), np.cos(u))


def test_empirical_cf_is_chunk_independent():
    samples = np.random.default_rng(5).normal(size=1000)
    whole = empirical_cf(samples, [1.0])
    chunked = empirical_cf(samples, [1.0], Settings(cf_chunk=7))
    assert whole[0] == pytest.approx(chunked[0], abs=1e-12)


def test_empirical_cf_of_normal_draws():
    samples = np.random.default_rng(6).normal(size=1_000_000)
    assert abs(empirical_cf(samples, [1.0])[0] - math.exp(-0.5)) < 0.004


def test_ks_distance_examples():
    assert ks_distance([0.0], stats.norm.cdf) == pytest.approx(0.5)
    m = 99
    quantiles = stats.norm.ppf(np.arange(1, m + 1) / (m + 1))
    assert ks_distance(quantiles, stats.norm.cdf) <= 1 / (m + 1) + 1e-9
    draws = np.random.default_rng(7).normal(size=100_000)
    assert ks_distance(draws, stats.norm.cdf) < 0.006


def test_lattice_point_mass_vanishing_case():
    odd = [1, -1, 3, -3, 1]
    result = lattice_point_mass(odd, 3, 2.0, 0.0, 2, residue=1)
    assert result.case == LatticeCase.VANISHING
    assert result.requested_point == 0
    assert result.vanishing_frequency == 0.0
    assert result.target_point == -1
    with pytest.raises(ParityError):
        lattice_point_mass(odd, 3, 2.0, 0.0, 2, residue=1, strict=True)


def test_lattice_point_mass_from_exact_law():
    b3 = bn(3, 2.0)
    result = lattice_point_mass(Z3_SAMPLES, 3, 2.0, 3.5 / b3, 2)
    assert result.case == LatticeCase.POSITIVE
    assert result.target_point == 3
    assert result.estimate == pytest.approx(b3 / 2 * 3 / 16, rel=1e-12)
    assert result.stderr == pytest.approx(b3 / 2 * math.sqrt(3 / 16 * 13 / 16 / 16), rel=1e-12)


def test_lattice_frequencies_total_mass():
    frequencies = lattice_frequencies(Z3_SAMPLES, 2, 1)
    assert sum(frequencies.values()) == 1.0
    assert frequencies[3] == 3 / 16


def test_interval_mass():
    result = interval_mass([0.0, 0.5, 2.0, -3.0], 100, 2.0, 0.0, -1.0, 1.0)
    assert result.estimate == pytest.approx(bn(100, 2.0) * 0.5 / 2)
    assert (result.lower, result.upper) == (-1.0, 1.0)
    with pytest.raises(ValueError):
        interval_mass([0.0], 100, 2.0, 0.0, 1.0, 1.0)


def test_exact_oracle_small_cases():
    assert exact_small_oracle(SRW1D, RADEMACHER, 1) == {-1: Fraction(1, 2), 1: Fraction(1, 2)}
    assert exact_small_oracle(SRW1D, RADEMACHER, 2) == {-2: Fraction(1, 4), 0: Fraction(1, 2), 2: Fraction(1, 4)}
    pmf = exact_small_oracle(SRW1D, RADEMACHER, 3)
    assert pmf[3] == Fraction(3, 16)
    assert pmf == {-3: Fraction(3, 16), -1: Fraction(5, 16), 1: Fraction(5, 16), 3: Fraction(3, 16)}


def test_exact_oracle_is_a_probability_law():
    for n in (5, 8):
        pmf = exact_small_oracle(SRW1D, RADEMACHER, n)
        assert sum(pmf.values()) == 1
        assert all((z - n) % 2 == 0 for z in pmf)
    lazy = exact_small_oracle(builtin_model("lazy2d"), RADEMACHER, 4)
    assert sum(lazy.values()) == 1


def test_exact_oracle_guards():
    with pytest.raises(OracleExplosionError):
        exact_small_oracle(SRW1D, RADEMACHER, 12, Settings(oracle_term_guard=1000))
    with pytest.raises(ValueError):
        exact_small_oracle(SRW1D, RADEMACHER, 13)
    with pytest.raises(ValueError):
        exact_small_oracle(builtin_model("cauchy1d"), RADEMACHER, 3)
    with pytest.raises(ValueError):
        exact_small_oracle(SRW1D, builtin_scenery("gaussian"), 3)


def test_holder_bound_holds_on_simulated_paths():
    for seed in range(5):
        n, rhs = holder_bound(_srw2d_field(3000, seed), 2.0)
        assert n <= rhs * (1 + 1e-12)
    with pytest.raises(ValueError):
        holder_bound(_frozen(10), 1.0)


def test_scale_ratios_of_frozen_walk():
    field = _frozen(100)
    assert vn_scale_ratio(field, 2.0) == pytest.approx(bn(100, 2.0) / 100)
    assert borne_ratio(field, 2.0) == pytest.approx(math.log(100) / 100)
    mean, stderr = borne_moment([field, field], 2.0)
    assert mean == pytest.approx(math.log(100) / 100)
    assert stderr == 0.0
    assert uniform_site_local_time(field, 1.0) == pytest.approx([100 * math.pi / math.log(100)])
