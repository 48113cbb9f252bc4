"""
Capacity planner: feasibility verdicts, maximum split ratios and upgrade years.

Every verdict is derived from one base-year trial set per split ratio.
Offered traffic is linear in the per-user mean, so the summary for a later
year is the base-year summary scaled by the compound growth factor; this
keeps the year-to-year results of one seed exactly consistent.
"""

import logging
from dataclasses import replace
from typing import Dict, Iterable, List, Optional

from domain.models import (Catalog, FeasibilityVerdict, ForecastParams, PlanningPolicy,
                           PonTechnology, ScenarioConfig, SimulationSummary, UpgradeSchedule)
from engine.forecast import growth_factor, project_demand
from engine.mc_engine import run_scenario, scale_summary
from utils.constants import LOG_MESSAGES

logger = logging.getLogger(__name__)


def check_feasibility(summary: SimulationSummary, tech: PonTechnology,
                      policy: PlanningPolicy) -> FeasibilityVerdict:
    """Compare the decision percentile against headroom x upstream capacity"""
    estimate = summary.estimate_for(policy.decision_percentile)
    statistic = estimate.ci_high if policy.use_ci_upper else estimate.point
    limit = policy.limit_for(tech)
    return FeasibilityVerdict(
        feasible=statistic <= limit,
        statistic_mbps=statistic,
        limit_mbps=limit,
        margin_mbps=limit - statistic,
        technology=tech.name,
        year=summary.year,
        split_n=summary.split_n,
        percentile=policy.decision_percentile,
    )


class CapacityPlanner:
    """Planner bound to one forecast, policy and simulation setup"""

    def __init__(self, params: ForecastParams, policy: PlanningPolicy, config: ScenarioConfig):
        self.params = params
        self.policy = policy
        percentiles = sorted(set(config.percentiles) | {policy.decision_percentile})
        self.config = replace(config, percentiles=tuple(percentiles))
        self._base_summaries: Dict[int, SimulationSummary] = {}

    def base_summary(self, split: int) -> SimulationSummary:
        """Simulated summary at the base year, computed once per split"""
        if split in self._base_summaries:
            logger.debug(LOG_MESSAGES["cache_hit"].format(split=split))
        else:
            self._base_summaries[split] = run_scenario(
                self.params, self.params.base_year, replace(self.config, split_n=split)
            )
        return self._base_summaries[split]

    def summary_for(self, split: int, year: int) -> SimulationSummary:
        """Summary of a split at a year, scaled from the base-year trial set"""
        return scale_summary(self.base_summary(split), growth_factor(self.params, year),
                             project_demand(self.params, year))

    def verdict(self, tech: PonTechnology, split: int, year: int) -> FeasibilityVerdict:
        return check_feasibility(self.summary_for(split, year), tech, self.policy)

    def max_split(self, tech: PonTechnology, year: int) -> int:
        """Largest feasible candidate split, 0 when none is feasible"""
        best = 0
        for split in self.policy.candidate_splits(tech):
            if self.verdict(tech, split, year).feasible:
                best = split
        return best

    def upgrade_year(self, tech: PonTechnology, split: int, horizon: int) -> Optional[int]:
        """First year in [base year, horizon] whose verdict is infeasible"""
        if split not in self.policy.split_options:
            raise ValueError(f"split {split} is not one of the split options {list(self.policy.split_options)}")
        if horizon < self.params.base_year:
            raise ValueError(f"horizon {horizon} is before base year {self.params.base_year}")

        for year in range(self.params.base_year, horizon + 1):
            if not self.verdict(tech, split, year).feasible:
                return year
        return None

    def build_schedule(self, catalog: Catalog, years: Iterable[int]) -> UpgradeSchedule:
        """Max split grid over technologies and years plus first infeasible years"""
        years = sorted(set(years))
        if not years:
            raise ValueError("at least one year is required")

        schedule = UpgradeSchedule(years=years, technologies=catalog.names())
        horizon = years[-1]
        for tech in catalog:
            schedule.max_splits[tech.name] = {year: self.max_split(tech, year) for year in years}
            for split in self.policy.candidate_splits(tech):
                schedule.upgrade_years[(tech.name, split)] = self.upgrade_year(tech, split, horizon)
        return schedule


def max_split(tech: PonTechnology, year: int, params: ForecastParams, policy: PlanningPolicy,
              config: ScenarioConfig) -> int:
    """Largest feasible split of a technology at a year"""
    return CapacityPlanner(params, policy, config).max_split(tech, year)


def upgrade_year(tech: PonTechnology, split: int, params: ForecastParams, policy: PlanningPolicy,
                 horizon: int, config: ScenarioConfig) -> Optional[int]:
    """First infeasible year of a (technology, split) pair, None if feasible throughout"""
    return CapacityPlanner(params, policy, config).upgrade_year(tech, split, horizon)


def build_schedule(catalog: Catalog, years: Iterable[int], params: ForecastParams,
                   policy: PlanningPolicy, config: ScenarioConfig) -> UpgradeSchedule:
    """Maximum split per technology and year with one seed for the whole grid"""
    return CapacityPlanner(params, policy, config).build_schedule(catalog, years)


def upgrade_table(catalog: Catalog, splits: Iterable[int], params: ForecastParams, policy: PlanningPolicy,
                  horizon: int, config: ScenarioConfig) -> List[dict]:
    """First infeasible year for every (technology, split) pair"""
    planner = CapacityPlanner(params, policy, config)
    splits = list(splits)
    return [
        {"technology": tech.name, "split": split, "upgrade_year": planner.upgrade_year(tech, split, horizon)}
        for tech in catalog
        for split in splits
    ]
