"""
Planning commands for the PON capacity planner
Feasibility verdicts, maximum split ratios, schedules and upgrade years
"""

import logging

from commands.options import (add_catalog_arguments, add_forecast_arguments, add_policy_arguments,
                              add_simulation_arguments, catalog_from, forecast_params_from, format_argument,
                              policy_from, scenario_config_from)
from domain.models import Catalog, OutputFormat
from engine.forecast import years_until
from engine.planner import CapacityPlanner, upgrade_table
from utils.constants import DEFAULT_HORIZON_YEAR, NG_PON2_NOTE
from utils.plots import PlotBuilder
from utils.reports import ReportBuilder

logger = logging.getLogger(__name__)


class PlanCommands:
    """Upgrade planning against PON standard capacities"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers):
        parser = subparsers.add_parser("plan", help="apply the feasibility rule to PON technologies")
        actions = parser.add_subparsers(dest="action", required=True)

        feasibility = self._add_action(actions, "feasibility", "verdict for technology, year and split")
        feasibility.add_argument("--year", type=int, required=True)
        feasibility.add_argument("--split", type=int, action="append", required=True)
        feasibility.set_defaults(handler=self.feasibility)

        max_split = self._add_action(actions, "max-split", "largest feasible split per technology and year")
        max_split.add_argument("--year", type=int, action="append", required=True)
        max_split.set_defaults(handler=self.max_split)

        schedule = self._add_action(actions, "schedule", "max split grid over years", allow_svg=True)
        schedule.add_argument("--years", type=int, nargs="+", default=None,
                              help=f"years to evaluate (default: base year to {DEFAULT_HORIZON_YEAR})")
        schedule.add_argument("--upgrade-years", action="store_true",
                              help="report first infeasible year per (technology, split) instead of the grid")
        schedule.set_defaults(handler=self.schedule)

        upgrade = self._add_action(actions, "upgrade-year", "first infeasible year per technology and split")
        upgrade.add_argument("--split", type=int, action="append", default=None)
        upgrade.add_argument("--horizon", type=int, default=DEFAULT_HORIZON_YEAR)
        upgrade.set_defaults(handler=self.upgrade_year)

    def _add_action(self, actions, name: str, help_text: str, allow_svg: bool = False):
        parser = actions.add_parser(name, help=help_text)
        parser.add_argument("--tech", action="append", default=None,
                            help="technology name, repeatable (default: whole catalog)")
        add_forecast_arguments(parser)
        add_simulation_arguments(parser)
        add_policy_arguments(parser)
        add_catalog_arguments(parser)
        format_argument(parser, allow_svg=allow_svg)
        return parser

    def _planner(self, args) -> CapacityPlanner:
        policy = policy_from(args)
        config = scenario_config_from(args, split=policy.split_options[0], percentiles=[policy.decision_percentile])
        return CapacityPlanner(forecast_params_from(args), policy, config)

    def _technologies(self, args) -> Catalog:
        catalog = catalog_from(args).catalog
        selected = catalog if not args.tech else Catalog(tuple(catalog.get(name) for name in args.tech))
        for tech in selected:
            if tech.note == NG_PON2_NOTE:
                logger.warning(f"{tech.name}: {tech.note}")
        return selected

    def feasibility(self, args) -> str:
        planner = self._planner(args)
        verdicts = [
            planner.verdict(tech, split, args.year)
            for tech in self._technologies(args)
            for split in args.split
        ]
        params = forecast_params_from(args)
        for verdict in verdicts:
            if verdict.feasible and verdict.statistic_mbps > 0 and params.cagr > 0:
                headroom_years = years_until(params, verdict.limit_mbps / verdict.statistic_mbps)
                logger.info(f"{verdict.technology} 1:{verdict.split_n} in {verdict.year}: feasible, "
                            f"limit reached after about {headroom_years} more year(s)")
            else:
                logger.info(f"{verdict.technology} 1:{verdict.split_n} in {verdict.year}: "
                            f"{'feasible' if verdict.feasible else 'infeasible'} "
                            f"(margin {verdict.margin_mbps:.1f} Mb/s)")
        return ReportBuilder.verdicts(verdicts, OutputFormat(args.format))

    def max_split(self, args) -> str:
        planner = self._planner(args)
        rows = [
            {"technology": tech.name, "year": year, "max_split": planner.max_split(tech, year)}
            for tech in self._technologies(args)
            for year in args.year
        ]
        return ReportBuilder.max_splits(rows, OutputFormat(args.format))

    def schedule(self, args) -> str:
        planner = self._planner(args)
        years = args.years or list(range(args.base_year, DEFAULT_HORIZON_YEAR + 1))
        schedule = planner.build_schedule(self._technologies(args), years)

        fmt = OutputFormat(args.format)
        if fmt == OutputFormat.SVG:
            return PlotBuilder.schedule(schedule, planner.policy.split_options)
        if args.upgrade_years:
            return ReportBuilder.upgrade_years(schedule.to_upgrade_rows(), fmt)
        return ReportBuilder.schedule(schedule, fmt)

    def upgrade_year(self, args) -> str:
        policy = policy_from(args)
        splits = args.split or list(policy.split_options)
        config = scenario_config_from(args, split=splits[0], percentiles=[policy.decision_percentile])
        rows = upgrade_table(self._technologies(args), splits, forecast_params_from(args), policy,
                             args.horizon, config)
        return ReportBuilder.upgrade_years(rows, OutputFormat(args.format))


def setup(app):
    """Setup function for registering the command group"""
    app.add_command_group(PlanCommands(app))
