"""Tests for feasibility verdicts and upgrade planning in engine/planner.py."""
import pytest

from domain.errors import MissingPercentileError
from domain.models import (BoxplotStats, Catalog, PercentileEstimate, PlanningPolicy, PonTechnology,
                           ScenarioConfig, SimulationSummary, TrafficDemand)
from engine.planner import (CapacityPlanner, build_schedule, check_feasibility, max_split, upgrade_table,
                            upgrade_year)

UNBOUNDED = PonTechnology("UNBOUNDED", 1e9, 1e9, 1024, 2030)


def _summary(point, ci_high=None, p=0.99):
    demand = TrafficDemand(year=2025, avg_mbps=1.0, peak_mbps=5.0, peak_factor=5.0)
    estimate = PercentileEstimate(p, point, point, point if ci_high is None else ci_high)
    return SimulationSummary(year=2025, split_n=64, demand=demand, estimates=(estimate,),
                             boxplot=BoxplotStats(0, 0, 0, 0, 0), trials=1, mean_mbps=point, std_mbps=0.0)


class TestCheckFeasibility:

    def test_gpon_limit(self, catalog):
        verdict = check_feasibility(_summary(1017.0), catalog.get("GPON"), PlanningPolicy())
        assert verdict.limit_mbps == 937.5
        assert not verdict.feasible
        assert verdict.margin_mbps == pytest.approx(-79.5)

    def test_zero_demand(self, catalog):
        verdict = check_feasibility(_summary(0.0), catalog.get("GPON"), PlanningPolicy())
        assert verdict.feasible
        assert verdict.margin_mbps == verdict.limit_mbps

    def test_limit_is_inclusive(self, catalog):
        assert check_feasibility(_summary(937.5), catalog.get("GPON"), PlanningPolicy()).feasible

    def test_conservative_mode_uses_upper_bound(self, catalog):
        summary = _summary(900.0, ci_high=950.0)
        assert check_feasibility(summary, catalog.get("GPON"), PlanningPolicy()).feasible
        verdict = check_feasibility(summary, catalog.get("GPON"), PlanningPolicy(use_ci_upper=True))
        assert not verdict.feasible
        assert verdict.statistic_mbps == 950.0

    def test_missing_decision_percentile(self, catalog):
        with pytest.raises(MissingPercentileError):
            check_feasibility(_summary(10.0, p=0.9), catalog.get("GPON"), PlanningPolicy())

    def test_monotone_in_capacity(self, catalog):
        summary = _summary(5_000.0)
        verdicts = [check_feasibility(summary, tech, PlanningPolicy())
                    for tech in sorted(catalog, key=lambda t: t.upstream_mbps)]
        first = next(i for i, v in enumerate(verdicts) if v.feasible)
        assert all(v.feasible for v in verdicts[first:])

    def test_invalid_policy(self):
        with pytest.raises(ValueError):
            PlanningPolicy(headroom=0.0)
        with pytest.raises(ValueError):
            PlanningPolicy(split_options=(4, 12, 16))


class TestCapacityPlanner:

    @pytest.fixture
    def planner(self, params):
        config = ScenarioConfig(split_n=4, trials=4_000, bootstrap_reps=20, percentiles=(0.5,), seed=3)
        return CapacityPlanner(params, PlanningPolicy(), config)

    def test_decision_percentile_added(self, planner):
        assert planner.config.percentiles == (0.5, 0.99)

    def test_base_summary_cached(self, planner):
        assert planner.base_summary(16) is planner.base_summary(16)

    def test_monotone_in_year(self, planner, catalog):
        gpon = catalog.get("GPON")
        verdicts = [planner.verdict(gpon, 32, year).feasible for year in range(2016, 2036)]
        assert verdicts == sorted(verdicts, reverse=True)

    def test_unbounded_capacity_never_upgrades(self, planner):
        assert planner.upgrade_year(UNBOUNDED, 1024, 2035) is None

    def test_split_outside_options(self, planner, catalog):
        with pytest.raises(ValueError):
            planner.upgrade_year(catalog.get("GPON"), 48, 2035)

    def test_horizon_before_base_year(self, planner, catalog):
        with pytest.raises(ValueError):
            planner.upgrade_year(catalog.get("GPON"), 32, 2010)

    def test_max_split_zero_when_nothing_fits(self, planner):
        tiny = PonTechnology("TINY", 0.001, 1.0, 64, 2000)
        assert planner.max_split(tiny, 2016) == 0

    def test_standard_cap(self, planner, catalog):
        assert planner.max_split(catalog.get("XGS-PON"), 2016) == 256

    def test_one_by_one_schedule(self, planner, catalog):
        schedule = planner.build_schedule(Catalog((catalog.get("GPON"),)), [2025])
        assert schedule.to_matrix_rows() == [{"technology": "GPON", "2025": planner.max_split(catalog.get("GPON"), 2025)}]

    def test_schedule_non_increasing_in_year(self, planner, catalog):
        years = list(range(2016, 2036))
        schedule = planner.build_schedule(catalog, years)
        for name in schedule.technologies:
            row = [schedule.max_split(name, year) for year in years]
            assert row == sorted(row, reverse=True)

    def test_schedule_non_decreasing_in_capacity(self, planner, catalog):
        schedule = planner.build_schedule(catalog, [2016, 2025, 2035])
        for year in schedule.years:
            assert schedule.max_split("GPON", year) <= schedule.max_split("XGS-PON", year)
            assert schedule.max_split("XGS-PON", year) <= schedule.max_split("25G-PON", year)

    def test_schedule_empty_years(self, planner, catalog):
        with pytest.raises(ValueError):
            planner.build_schedule(catalog, [])

    def test_module_functions_agree(self, params, catalog, planner):
        gpon = catalog.get("GPON")
        config = planner.config
        policy = planner.policy
        assert max_split(gpon, 2025, params, policy, config) == planner.max_split(gpon, 2025)
        assert upgrade_year(gpon, 64, params, policy, 2035, config) == planner.upgrade_year(gpon, 64, 2035)
        schedule = build_schedule(Catalog((gpon,)), [2020, 2030], params, policy, config)
        assert schedule.max_split("GPON", 2030) == planner.max_split(gpon, 2030)

    def test_upgrade_table_rows(self, params, catalog, planner):
        rows = upgrade_table(Catalog((catalog.get("GPON"), UNBOUNDED)), [32, 64], params, planner.policy,
                             2035, planner.config)
        assert [(r["technology"], r["split"]) for r in rows] == [
            ("GPON", 32), ("GPON", 64), ("UNBOUNDED", 32), ("UNBOUNDED", 64)]
        assert rows[-1]["upgrade_year"] is None


@pytest.mark.slow
class TestRoadmap:
    """Roadmap checks at the full trial count"""

    def test_gpon_2025_worked_example(self, acceptance_planner, catalog):
        gpon = catalog.get("GPON")
        at_64 = acceptance_planner.verdict(gpon, 64, 2025)
        assert not at_64.feasible
        assert at_64.limit_mbps == 937.5
        assert 961 <= at_64.statistic_mbps <= 1073
        assert acceptance_planner.verdict(gpon, 32, 2025).feasible
        assert acceptance_planner.max_split(gpon, 2025) == 32

    def test_gpon_64_upgrade_year(self, acceptance_planner, catalog):
        assert acceptance_planner.upgrade_year(catalog.get("GPON"), 64, 2035) == 2025

    def test_xgs_pon_128_upgrade_year(self, acceptance_planner, catalog):
        assert 2031 <= acceptance_planner.upgrade_year(catalog.get("XGS-PON"), 128, 2035) <= 2033

    def test_gpon_2016_uncapped(self, uncapped_planner, catalog):
        gpon = catalog.get("GPON")
        assert uncapped_planner.max_split(gpon, 2016) == 512
        assert not uncapped_planner.verdict(gpon, 1024, 2016).feasible

    def test_gpon_2016_standard_cap(self, acceptance_planner, catalog):
        assert acceptance_planner.max_split(catalog.get("GPON"), 2016) == 128

    def test_next_generation_through_2035(self, acceptance_planner, catalog):
        for name in ("25G-PON", "NG-PON2"):
            tech = catalog.get(name)
            assert all(acceptance_planner.max_split(tech, year) >= 128 for year in range(2016, 2036))

    def test_decision_statistic_grows_with_split(self, acceptance_planner):
        points = [acceptance_planner.base_summary(split).estimate_for(0.99).point
                  for split in acceptance_planner.policy.split_options]
        assert points == sorted(points)
