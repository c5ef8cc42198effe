"""Application bootstrap: config, logging and command dispatch.

This is the single place that wires the parsed command line to the command
registry and decides where output goes: reports on stdout, errors and logs
on stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from loguru import logger

from condcompat.commands import CommandRegistry, default_registry
from condcompat.config import AppConfig, get_config
from condcompat.constants import FORMATS
from condcompat.report import Report


class Application:
    """Top-level application that owns the config and the command registry."""

    def __init__(
        self,
        config: AppConfig | None = None,
        registry: CommandRegistry | None = None,
    ) -> None:
        self._config = config or get_config()
        self.registry = registry or default_registry()
        self.parser = self._build_parser()

    def _global_flags(self, parser: argparse.ArgumentParser, suppress: bool) -> None:
        parser.add_argument(
            "--format",
            choices=FORMATS,
            default=argparse.SUPPRESS if suppress else self._config.check.format,
            help="text report or line-oriented key=value output",
        )
        parser.add_argument(
            "--verbose",
            "-v",
            action="store_true",
            default=argparse.SUPPRESS if suppress else False,
            help="log debug details to stderr",
        )

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="condcompat",
            description="Compatibility of discrete conditional distributions.",
        )
        self._global_flags(parser, suppress=False)
        # Global flags are accepted after the subcommand as well.
        common = argparse.ArgumentParser(add_help=False)
        self._global_flags(common, suppress=True)
        self.registry.add_subparsers(parser, self._config, parents=[common])
        return parser

    def _configure_logging(self, verbose: bool) -> None:
        level = "DEBUG" if verbose else self._config.logging.level
        logger.remove()
        logger.add(sys.stderr, level=level)

    def run(self, argv: Sequence[str] | None = None) -> int:
        """Parse ``argv``, run one command and return its exit code."""
        args = self.parser.parse_args(argv)
        self._configure_logging(args.verbose)
        logger.debug(f"Config loaded from {self._config.source or 'built-in defaults'}")

        report = Report(args.format, self._config.display.decimal_places)
        code = self.registry.execute(args.command, args, report)

        sys.stdout.write(report.render())
        sys.stderr.write(report.render_errors())
        logger.debug(f"'{args.command}' finished with exit code {code}")
        return code
