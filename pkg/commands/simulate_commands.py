"""
Simulation commands for the PON capacity planner
Monte Carlo summaries of aggregate offered traffic per split ratio
"""

import logging
from pathlib import Path

from commands.options import (add_catalog_arguments, add_forecast_arguments, add_simulation_arguments,
                              catalog_from, forecast_params_from, format_argument, scenario_config_from)
from domain.models import OutputFormat
from engine.forecast import project_demand
from engine.mc_engine import simulate_aggregate, summarize
from engine.zipf_model import build_population
from utils.constants import DEFAULT_HEADROOM, DEFAULT_PERCENTILES, DEFAULT_SPLIT_OPTIONS
from utils.plots import PlotBuilder
from utils.reports import ReportBuilder

logger = logging.getLogger(__name__)


class SimulateCommands:
    """Aggregate traffic simulation"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers):
        parser = subparsers.add_parser("simulate", help="simulate aggregate PON traffic per split")
        parser.add_argument("--year", type=int, default=None, help="forecast year (default: base year)")
        parser.add_argument("--split", type=int, action="append", default=None,
                            help="split ratio N of 1:N, repeatable (default: 4 to 1024)")
        parser.add_argument("--percentiles", type=float, nargs="+", default=list(DEFAULT_PERCENTILES))
        parser.add_argument("--tech", action="append", default=[],
                            help="technology whose capacity lines are drawn in svg output, repeatable")
        parser.add_argument("--headroom", type=float, default=DEFAULT_HEADROOM,
                            help="fraction of capacity drawn as the planning limit line")
        parser.add_argument("--samples-out", default=None,
                            help="write the first split's trial set as single-column CSV")
        add_forecast_arguments(parser)
        add_simulation_arguments(parser)
        add_catalog_arguments(parser)
        format_argument(parser, allow_svg=True)
        parser.set_defaults(handler=self.simulate)

    def simulate(self, args) -> str:
        """One summary per split, or a boxplot chart"""
        params = forecast_params_from(args)
        year = params.base_year if args.year is None else args.year
        splits = args.split or list(DEFAULT_SPLIT_OPTIONS)
        technologies = [catalog_from(args).get(name) for name in args.tech]
        if not 0 < args.headroom <= 1:
            raise ValueError(f"headroom must be in (0, 1], got {args.headroom}")

        demand = project_demand(params, year)
        summaries = []
        for index, split in enumerate(splits):
            config = scenario_config_from(args, split, args.percentiles)
            pop = build_population(config.population_size, config.alpha, demand.peak_mbps)
            trialset = simulate_aggregate(pop, config)
            if index == 0 and args.samples_out:
                Path(args.samples_out).write_text(trialset.to_csv(), encoding="utf-8")
                logger.info(f"Wrote {len(trialset)} samples to {args.samples_out}")
            summaries.append(summarize(trialset, demand, config))

        fmt = OutputFormat(args.format)
        if fmt == OutputFormat.SVG:
            return PlotBuilder.boxplots(summaries, technologies, args.headroom)
        return ReportBuilder.simulations(summaries, fmt)


def setup(app):
    """Setup function for registering the command group"""
    app.add_command_group(SimulateCommands(app))
