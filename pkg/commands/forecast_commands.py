"""
Forecast commands for the PON capacity planner
Renders the per-household demand table
"""

import logging

from commands.options import add_forecast_arguments, forecast_params_from, format_argument
from domain.models import OutputFormat
from engine.forecast import demand_table
from utils.constants import DEFAULT_FORECAST_YEARS, DEFAULT_PEAK_FACTORS
from utils.reports import ReportBuilder

logger = logging.getLogger(__name__)


class ForecastCommands:
    """Household traffic forecast"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers):
        parser = subparsers.add_parser("forecast", help="project per-household demand across years")
        parser.add_argument("--years", type=int, nargs="+", default=list(DEFAULT_FORECAST_YEARS))
        parser.add_argument("--peak-factors", type=float, nargs="+", default=list(DEFAULT_PEAK_FACTORS))
        add_forecast_arguments(parser, peak_factor=False)
        format_argument(parser)
        parser.set_defaults(handler=self.forecast)

    def forecast(self, args) -> str:
        """Average and peak demand per (year, peak factor)"""
        params = forecast_params_from(args)
        rows = demand_table(params, args.years, args.peak_factors)
        logger.info(f"Projected {len(rows)} demand rows from {params.base_consumption} GB/month")
        return ReportBuilder.forecast(rows, OutputFormat(args.format))


def setup(app):
    """Setup function for registering the command group"""
    app.add_command_group(ForecastCommands(app))
