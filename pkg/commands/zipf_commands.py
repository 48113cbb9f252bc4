"""
Zipf profile commands for the PON capacity planner
Cumulative traffic share curves, top-fraction shares and calibration statistics
"""

import logging

from commands.options import add_forecast_arguments, forecast_params_from, format_argument
from domain.models import OutputFormat
from engine.forecast import project_demand
from engine.zipf_model import build_population, cdf_points, compare_profiles, population_stats
from utils.constants import DEFAULT_POPULATION_SIZE, DEFAULT_SHARE_FRACTIONS
from utils.reports import ReportBuilder

logger = logging.getLogger(__name__)


class ZipfCommands:
    """Heavy-hitter population analytics"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers):
        parser = subparsers.add_parser("zipf", help="inspect Zipf traffic profiles")
        parser.add_argument("view", nargs="?", choices=["cdf", "shares", "stats"], default="shares")
        parser.add_argument("--alpha", type=float, nargs="+", default=[0.0, 1.0, 1.4],
                            help="shape parameters to compare")
        parser.add_argument("--size", type=int, default=DEFAULT_POPULATION_SIZE)
        parser.add_argument("--mean", type=float, default=None,
                            help="mean offered bandwidth in Mb/s (default: base-year peak demand)")
        parser.add_argument("--fractions", type=float, nargs="+", default=list(DEFAULT_SHARE_FRACTIONS))
        add_forecast_arguments(parser)
        format_argument(parser)
        parser.set_defaults(handler=self.zipf)

    def zipf(self, args) -> str:
        fmt = OutputFormat(args.format)
        mean = args.mean
        if mean is None:
            params = forecast_params_from(args)
            mean = project_demand(params, params.base_year).peak_mbps

        if args.view == "cdf":
            curves = {alpha: cdf_points(build_population(args.size, alpha, mean)) for alpha in args.alpha}
            return ReportBuilder.zipf_cdf(curves, fmt)

        if args.view == "stats":
            rows = []
            for alpha in args.alpha:
                pop = build_population(args.size, alpha, mean)
                avg, std = population_stats(pop)
                values = [float(v) for v in pop.values]
                row = {"alpha": alpha, "size": pop.size, "mean_mbps": avg, "std_mbps": std}
                for i in range(3):
                    row[f"top{i + 1}_mbps"] = values[i] if i < len(values) else None
                    row[f"bottom{i + 1}_mbps"] = values[-(i + 1)] if i < len(values) else None
                rows.append(row)
            return ReportBuilder.zipf_stats(rows, fmt)

        logger.debug(f"Comparing shares for alphas {args.alpha} at mean {mean:.4f} Mb/s")
        return ReportBuilder.zipf_shares(compare_profiles(args.size, args.alpha, mean, args.fractions), fmt)


def setup(app):
    """Setup function for registering the command group"""
    app.add_command_group(ZipfCommands(app))
