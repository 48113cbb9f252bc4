"""
Catalog commands for the PON capacity planner
"""

from commands.options import add_catalog_arguments, catalog_from, format_argument
from domain.models import OutputFormat
from domain.tech_catalog import serialize_catalog
from utils.reports import ReportBuilder


class CatalogCommands:
    """Technology catalog listing"""

    def __init__(self, app):
        self.app = app

    def register(self, subparsers):
        parser = subparsers.add_parser("catalog", help="list the active PON technology catalog")
        add_catalog_arguments(parser)
        format_argument(parser)
        parser.set_defaults(handler=self.catalog)

    def catalog(self, args) -> str:
        """Active catalog; csv output is itself a valid catalog file"""
        catalog = catalog_from(args).catalog
        fmt = OutputFormat(args.format)
        if fmt == OutputFormat.CSV:
            return serialize_catalog(catalog)
        return ReportBuilder.catalog(catalog, fmt)


def setup(app):
    """Setup function for registering the command group"""
    app.add_command_group(CatalogCommands(app))
