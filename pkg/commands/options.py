"""
Shared command-line options for the planner commands
"""

import argparse
from typing import List

from config import Config
from domain.models import ForecastParams, OutputFormat, PlanningPolicy, ScenarioConfig
from domain.tech_catalog import CatalogManager
from utils.constants import (DEFAULT_ALPHA, DEFAULT_BASE_CONSUMPTION_GB, DEFAULT_BASE_YEAR, DEFAULT_CAGR,
                             DEFAULT_CONFIDENCE, DEFAULT_DECISION_PERCENTILE, DEFAULT_HEADROOM,
                             DEFAULT_PEAK_FACTOR, DEFAULT_POPULATION_SIZE, DEFAULT_SPLIT_OPTIONS)


def format_argument(parser: argparse.ArgumentParser, allow_svg: bool = False):
    """Add --format with the layouts a command supports"""
    choices = [f.value for f in OutputFormat if allow_svg or f != OutputFormat.SVG]
    parser.add_argument("--format", choices=choices, default=OutputFormat.TABLE.value,
                        help="output layout (default: table)")


def add_forecast_arguments(parser: argparse.ArgumentParser, peak_factor: bool = True):
    """Options describing household demand growth"""
    group = parser.add_argument_group("forecast")
    group.add_argument("--base-year", type=int, default=DEFAULT_BASE_YEAR)
    group.add_argument("--base-gb-month", type=float, default=DEFAULT_BASE_CONSUMPTION_GB,
                       help="GB per month per household at the base year")
    group.add_argument("--cagr", type=float, default=DEFAULT_CAGR,
                       help="compound annual growth rate as a fraction")
    if peak_factor:
        group.add_argument("--peak-factor", type=float, default=DEFAULT_PEAK_FACTOR,
                           help="peak-to-average multiplier")


def add_simulation_arguments(parser: argparse.ArgumentParser):
    """Options controlling the Monte Carlo engine"""
    group = parser.add_argument_group("simulation")
    group.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="Zipf shape parameter")
    group.add_argument("--population-size", type=int, default=DEFAULT_POPULATION_SIZE)
    group.add_argument("--trials", type=int, default=Config.default_trials())
    group.add_argument("--reps", type=int, default=Config.default_bootstrap_reps(),
                       help="bootstrap resamples")
    group.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    group.add_argument("--seed", type=int, default=Config.default_seed(),
                       help="reproducibility seed (env PONPLAN_SEED)")
    group.add_argument("--workers", type=int, default=Config.default_workers())


def add_catalog_arguments(parser: argparse.ArgumentParser):
    """Options selecting the technology catalog"""
    group = parser.add_argument_group("catalog")
    group.add_argument("--catalog", default=Config.CATALOG_FILE,
                       help="catalog CSV extending the builtin technologies")
    group.add_argument("--catalog-replace", action="store_true",
                       help="use the catalog file alone instead of extending the builtin set")


def add_policy_arguments(parser: argparse.ArgumentParser):
    """Options of the feasibility rule"""
    group = parser.add_argument_group("policy")
    group.add_argument("--headroom", type=float, default=DEFAULT_HEADROOM,
                       help="usable fraction of upstream capacity")
    group.add_argument("--percentile", type=float, default=DEFAULT_DECISION_PERCENTILE,
                       help="decision percentile")
    group.add_argument("--use-ci-upper", action="store_true",
                       help="compare the confidence interval upper bound instead of the point estimate")
    group.add_argument("--ignore-standard-split", action="store_true",
                       help="allow splits above each standard's maximum")
    group.add_argument("--split-options", type=int, nargs="+", default=list(DEFAULT_SPLIT_OPTIONS),
                       help="candidate split ladder")


def forecast_params_from(args: argparse.Namespace) -> ForecastParams:
    return ForecastParams(
        base_year=args.base_year,
        base_consumption=args.base_gb_month,
        cagr=args.cagr,
        peak_factor=getattr(args, "peak_factor", DEFAULT_PEAK_FACTOR),
    )


def scenario_config_from(args: argparse.Namespace, split: int, percentiles: List[float]) -> ScenarioConfig:
    return ScenarioConfig(
        split_n=split,
        trials=args.trials,
        bootstrap_reps=args.reps,
        confidence=args.confidence,
        percentiles=tuple(percentiles),
        seed=args.seed,
        workers=args.workers,
        population_size=args.population_size,
        alpha=args.alpha,
    )


def policy_from(args: argparse.Namespace) -> PlanningPolicy:
    return PlanningPolicy(
        headroom=args.headroom,
        decision_percentile=args.percentile,
        use_ci_upper=args.use_ci_upper,
        split_options=tuple(args.split_options),
        enforce_standard_split=not args.ignore_standard_split,
    )


def catalog_from(args: argparse.Namespace) -> CatalogManager:
    return CatalogManager(args.catalog, replace=args.catalog_replace)
