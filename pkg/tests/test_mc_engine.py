"""Tests for the Monte Carlo engine in engine/mc_engine.py."""
import itertools
from dataclasses import replace

import numpy as np
import pytest

from domain.errors import MissingPercentileError
from domain.models import ForecastParams, ScenarioConfig, TrialSet
from engine.forecast import growth_factor, project_demand
from engine.mc_engine import (boxplot_stats, bootstrap_ci, bootstrap_percentiles, empirical_percentile,
                              run_scenario, scale_summary, simulate_aggregate, summarize)
from engine.zipf_model import build_population, population_stats

from tests.conftest import ACCEPTANCE_SEED


def _trialset(samples):
    pop = build_population(1, 0.0, 1.0)
    return TrialSet(samples=np.asarray(samples, dtype=np.float64), population=pop, split_n=1, seed=0)


class TestSimulateAggregate:

    def test_trial_count_spans_partial_block(self):
        config = ScenarioConfig(split_n=3, trials=10_000, seed=5)
        trialset = simulate_aggregate(build_population(10, 1.0, 1.0), config)
        assert len(trialset) == 10_000

    def test_identical_across_thread_counts(self):
        pop = build_population(100, 1.0, 1.18)
        config = ScenarioConfig(split_n=16, trials=20_000, seed=42, workers=1)
        single = simulate_aggregate(pop, config)
        threaded = simulate_aggregate(pop, replace(config, workers=4))
        assert np.array_equal(single.samples, threaded.samples)

    def test_prefix_stable_when_trials_grow(self):
        pop = build_population(100, 1.0, 1.0)
        short = simulate_aggregate(pop, ScenarioConfig(split_n=4, trials=5_000, seed=9))
        long = simulate_aggregate(pop, ScenarioConfig(split_n=4, trials=9_000, seed=9))
        assert np.array_equal(short.samples, long.samples[:5_000])

    def test_seed_changes_samples(self):
        pop = build_population(100, 1.0, 1.0)
        a = simulate_aggregate(pop, ScenarioConfig(split_n=4, trials=1_000, seed=1))
        b = simulate_aggregate(pop, ScenarioConfig(split_n=4, trials=1_000, seed=2))
        assert not np.array_equal(a.samples, b.samples)

    def test_mean_consistency(self):
        pop = build_population(100, 1.0, 1.18)
        config = ScenarioConfig(split_n=32, trials=50_000, seed=3)
        trialset = simulate_aggregate(pop, config)
        _, sigma = population_stats(pop)
        tolerance = 4 * sigma * np.sqrt(config.split_n / config.trials)
        assert abs(trialset.samples.mean() - config.split_n * 1.18) < tolerance

    @pytest.mark.parametrize("split", [2, 3])
    def test_matches_enumerated_distribution(self, split):
        pop = build_population(4, 1.0, 1.0)
        trialset = simulate_aggregate(pop, ScenarioConfig(split_n=split, trials=100_000, seed=11))

        # rounding merges sums that differ only by float summation order
        exact = np.sort(np.round([sum(combo) for combo in itertools.product(pop.values, repeat=split)], 9))
        grid = np.unique(exact)
        exact_cdf = np.searchsorted(exact, grid, side="right") / exact.size
        samples = np.sort(np.round(trialset.samples, 9))
        empirical_cdf = np.searchsorted(samples, grid, side="right") / samples.size
        assert np.max(np.abs(exact_cdf - empirical_cdf)) < 0.01

    def test_samples_read_only(self, small_config):
        trialset = simulate_aggregate(build_population(10, 1.0, 1.0), small_config)
        with pytest.raises(ValueError):
            trialset.samples[0] = 0.0

    def test_to_csv_single_column(self):
        text = _trialset([1.5, 2.0]).to_csv()
        assert text == "aggregate_mbps\n1.5\n2.0\n"

    def test_to_csv_full_precision(self):
        text = _trialset([0.1 + 0.2, 1017.3456789012]).to_csv()
        assert text.splitlines()[1:] == ["0.30000000000000004", "1017.3456789012"]


class TestEmpiricalPercentile:

    def test_linear_interpolation(self):
        data = list(range(1, 101))
        assert empirical_percentile(data, 0.5) == pytest.approx(50.5)
        assert empirical_percentile(data, 0.99) == pytest.approx(99.01)

    def test_single_sample(self):
        assert empirical_percentile([4.2], 0.9) == 4.2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            empirical_percentile([], 0.5)

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.5])
    def test_level_outside_open_interval(self, p):
        with pytest.raises(ValueError):
            empirical_percentile([1.0, 2.0], p)


class TestBootstrap:

    def test_degenerate_sample(self):
        estimate = bootstrap_ci(_trialset([3.0] * 50), 0.9, reps=100, confidence=0.95, seed=1)
        assert (estimate.point, estimate.ci_low, estimate.ci_high) == (3.0, 3.0, 3.0)

    def test_interval_contains_point_on_random_scenarios(self):
        rng = np.random.default_rng(2024)
        for index in range(100):
            pop = build_population(int(rng.integers(2, 21)), float(rng.uniform(0, 2)), float(rng.uniform(0.1, 10)))
            config = ScenarioConfig(split_n=int(rng.integers(1, 17)), trials=int(rng.integers(200, 1001)),
                                    bootstrap_reps=20, seed=index)
            trialset = simulate_aggregate(pop, config)
            for estimate in bootstrap_percentiles(trialset, [0.5, 0.9, 0.99], 20, 0.95, index):
                assert estimate.ci_low <= estimate.point <= estimate.ci_high

    def test_interval_narrows_with_more_trials(self):
        pop = build_population(100, 1.0, 1.0)
        widths = {2_000: [], 32_000: []}
        for seed in range(10):
            for trials in widths:
                trialset = simulate_aggregate(pop, ScenarioConfig(split_n=16, trials=trials, seed=seed))
                estimate = bootstrap_ci(trialset, 0.5, reps=100, confidence=0.95, seed=seed)
                widths[trials].append(estimate.ci_high - estimate.ci_low)
        assert np.median(widths[32_000]) < np.median(widths[2_000])
        assert sum(wide > narrow for wide, narrow in zip(widths[2_000], widths[32_000])) >= 8

    def test_shared_resamples_match_single_level(self):
        trialset = simulate_aggregate(build_population(50, 1.0, 1.0), ScenarioConfig(split_n=8, trials=3_000, seed=6))
        joint = bootstrap_percentiles(trialset, [0.5, 0.99], 60, 0.9, 6)
        single = bootstrap_ci(trialset, 0.99, 60, 0.9, 6)
        assert joint[1].point == single.point

    def test_reproducible(self):
        trialset = simulate_aggregate(build_population(50, 1.0, 1.0), ScenarioConfig(split_n=8, trials=3_000, seed=6))
        assert bootstrap_ci(trialset, 0.9, 80, 0.95, 8) == bootstrap_ci(trialset, 0.9, 80, 0.95, 8)

    def test_invalid_arguments(self):
        trialset = _trialset([1.0, 2.0, 3.0])
        with pytest.raises(ValueError):
            bootstrap_ci(trialset, 0.5, reps=0, confidence=0.95, seed=1)
        with pytest.raises(ValueError):
            bootstrap_ci(trialset, 0.5, reps=10, confidence=1.0, seed=1)


class TestBoxplot:

    def test_five_numbers(self):
        box = boxplot_stats(list(range(1, 101)))
        assert box.as_tuple() == pytest.approx((1.0, 25.75, 50.5, 75.25, 100.0))

    def test_whiskers_stop_at_last_sample_within_reach(self):
        box = boxplot_stats([1, 2, 3, 4, 5, 6, 7, 8, 100])
        assert box.whisker_high == 8.0
        assert box.whisker_low == 1.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            boxplot_stats([])


class TestSummaries:

    def test_summary_fields(self, params, small_config):
        demand = project_demand(params, 2020)
        pop = build_population(100, 1.0, demand.peak_mbps)
        summary = summarize(simulate_aggregate(pop, small_config), demand, small_config)
        assert summary.year == 2020
        assert summary.split_n == 8
        assert summary.trials == 5_000
        assert summary.percentiles == [0.5, 0.9, 0.99]
        assert summary.boxplot.q1 <= summary.boxplot.median <= summary.boxplot.q3
        assert summary.std_mbps > 0

    def test_missing_percentile(self, params, small_config):
        summary = run_scenario(params, 2016, small_config)
        with pytest.raises(MissingPercentileError):
            summary.estimate_for(0.75)

    def test_linear_scaling_across_years(self, params):
        config = ScenarioConfig(split_n=64, trials=8_000, bootstrap_reps=40, seed=12)
        base = run_scenario(params, 2016, config)
        later = run_scenario(params, 2025, config)
        factor = growth_factor(params, 2025)
        scaled = scale_summary(base, factor, project_demand(params, 2025))
        for direct, derived in zip(later.estimates, scaled.estimates):
            assert derived.point == pytest.approx(direct.point, rel=1e-12)
            assert derived.ci_low == pytest.approx(direct.ci_low, rel=1e-12)
            assert derived.ci_high == pytest.approx(direct.ci_high, rel=1e-12)
        assert scaled.boxplot.as_tuple() == pytest.approx(later.boxplot.as_tuple(), rel=1e-12)
        assert scaled.mean_mbps == pytest.approx(later.mean_mbps, rel=1e-12)

    def test_negative_scale_rejected(self, params, small_config):
        summary = run_scenario(params, 2016, small_config)
        with pytest.raises(ValueError):
            scale_summary(summary, -1.0, project_demand(params, 2016))


@pytest.mark.slow
class TestWorkedExample:
    """Year 2025, 8.81 Mb/s peak per household, full trial count"""

    @pytest.fixture(scope="class")
    def summaries(self):
        config = ScenarioConfig(split_n=64, trials=100_000, bootstrap_reps=100, seed=ACCEPTANCE_SEED, workers=4)
        return {
            split: run_scenario(ForecastParams(), 2025, replace(config, split_n=split))
            for split in (32, 64)
        }

    def test_split_64_percentiles(self, summaries):
        summary = summaries[64]
        assert 531 <= summary.estimate_for(0.5).point <= 556
        assert 754 <= summary.estimate_for(0.9).point <= 799
        assert 961 <= summary.estimate_for(0.99).point <= 1073

    def test_split_32_tail(self, summaries):
        assert 600 <= summaries[32].estimate_for(0.99).point <= 650

    def test_aggregate_mean(self, summaries):
        demand = project_demand(ForecastParams(), 2025)
        assert summaries[64].mean_mbps == pytest.approx(64 * demand.peak_mbps, rel=0.01)
