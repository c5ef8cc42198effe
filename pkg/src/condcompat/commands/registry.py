from __future__ import annotations

import argparse

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.completion import SUPPORTED_PATTERNS
from condcompat.config import AppConfig
from condcompat.constants import EXIT_USAGE
from condcompat.errors import CondCompatError, PatternMismatchError
from condcompat.report import Report


class CommandRegistry:
    def __init__(self) -> None:
        self._commands: dict[str, BaseCommand] = {}

    @property
    def command_names(self) -> list[str]:
        """List of registered command names."""
        return list(self._commands.keys())

    def register(self, command: BaseCommand) -> None:
        if command.name in self._commands:
            raise ValueError(f"Command '{command.name}' already registered.")
        self._commands[command.name] = command

    def get_command(self, name: str) -> BaseCommand | None:
        return self._commands.get(name)

    def add_subparsers(
        self,
        parser: argparse.ArgumentParser,
        config: AppConfig,
        parents: list[argparse.ArgumentParser] | None = None,
    ) -> None:
        """Attach one subparser per registered command."""
        sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for command in self._commands.values():
            child = sub.add_parser(
                command.name,
                help=command.help,
                description=command.help,
                parents=parents or [],
            )
            command.add_arguments(child, config)

    def execute(self, name: str, args: argparse.Namespace, report: Report) -> int:
        command = self.get_command(name)
        if not command:
            report.error(f"Command '{name}' not found.")
            return EXIT_USAGE

        try:
            return command.run(args, report)
        except PatternMismatchError as e:
            report.error(f"{e}")
            for pattern in SUPPORTED_PATTERNS:
                report.error(f"supported pattern: {pattern}")
            return EXIT_USAGE
        except CondCompatError as e:
            logger.debug(f"'{name}' failed: {type(e).__name__}: {e}")
            report.error(f"{type(e).__name__}: {e}")
            return EXIT_USAGE

    def __contains__(self, name: str) -> bool:
        return name in self._commands

    def __len__(self) -> int:
        return len(self._commands)
