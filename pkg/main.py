"""
PON Capacity Planner - Main Entry Point
Forecasts household demand, simulates aggregate upstream traffic with a Zipf
heavy-hitter population and plans PON split ratios and technology upgrades.
"""

import argparse
import importlib
import logging
import sys
from pathlib import Path
from typing import List, Optional

import colorlog

from config import Config
from utils.constants import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, LOG_MESSAGES

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)

COMMAND_MODULES = [
    "commands.forecast_commands",
    "commands.zipf_commands",
    "commands.simulate_commands",
    "commands.plan_commands",
    "commands.catalog_commands",
]


def setup_logging(level: str, log_file: Optional[str] = None):
    """Configure colored stderr logging, stdout stays reserved for reports"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_ponplan", False):
            root.removeHandler(handler)
            handler.close()

    stream = colorlog.StreamHandler(sys.stderr)
    stream.setFormatter(colorlog.ColoredFormatter(
        "%(log_color)s" + LOG_FORMAT,
        log_colors={
            "DEBUG": "cyan",
            "INFO": "green",
            "WARNING": "yellow",
            "ERROR": "red",
            "CRITICAL": "bold_red",
        },
    ))
    handlers = [stream]

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    for handler in handlers:
        handler._ponplan = True
        root.addHandler(handler)
    root.setLevel(level.upper())


class PlannerApp:
    """Command-line application holding the registered command groups"""

    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="ponplan",
            description="PON capacity planning with Zipf traffic profiles and Monte Carlo aggregation",
        )
        self.parser.add_argument("--log-level", default=Config.LOG_LEVEL,
                                 choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                                 type=str.upper, help="stderr log level (env PONPLAN_LOG_LEVEL)")
        self.parser.add_argument("--output", default=None,
                                 help="write the report to FILE instead of stdout")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)
        self.command_groups = []

        for module in COMMAND_MODULES:
            try:
                importlib.import_module(module).setup(self)
                logger.debug(f"Loaded command module: {module}")
            except Exception as e:
                logger.error(LOG_MESSAGES["command_module_failed"].format(module=module, error=e))
                raise

    def add_command_group(self, group):
        group.register(self.subparsers)
        self.command_groups.append(group)

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse arguments, run one command and write its report"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_USAGE

        try:
            setup_logging(args.log_level, Config.LOG_FILE)
        except OSError as e:
            setup_logging(args.log_level)
            return self.on_command_error(args.command, e)

        try:
            report = args.handler(args)
            if args.output:
                Path(args.output).write_text(report, encoding="utf-8")
                logger.info(f"Wrote {args.command} report to {args.output}")
            else:
                sys.stdout.write(report)
            return EXIT_OK
        except Exception as e:
            return self.on_command_error(args.command, e)

    def on_command_error(self, command: str, error: Exception) -> int:
        """Global error handler"""
        if isinstance(error, (ValueError, KeyError, OSError)):
            logger.error(LOG_MESSAGES["command_error"].format(command=command, error=error))
            return EXIT_USAGE

        logger.exception(LOG_MESSAGES["command_error"].format(command=command, error=error))
        return EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """Main function to run the planner"""
    try:
        Config.validate()
    except ValueError as e:
        print(f"ponplan: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    return PlannerApp().run(argv)


if __name__ == "__main__":
    sys.exit(main())
