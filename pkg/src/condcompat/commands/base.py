"""Base class for CLI subcommands."""

from __future__ import annotations

import argparse
from abc import ABC, abstractmethod

from condcompat.config import AppConfig
from condcompat.report import Report


class BaseCommand(ABC):
    """
    Abstract base class for subcommands.

    A command declares its arguments on an argparse subparser and runs
    against parsed arguments, writing its findings into a ``Report``.

    Subclasses must implement: name, help, add_arguments, run.
    Commands may raise ``CondCompatError``; the registry turns it into an
    error report and the usage exit code.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name on the command line (e.g. 'check')."""
        ...

    @property
    @abstractmethod
    def help(self) -> str:
        """One-line description shown by ``--help``."""
        ...

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        """Declare the subcommand's arguments; ``config`` supplies defaults."""
        ...

    @abstractmethod
    def run(self, args: argparse.Namespace, report: Report) -> int:
        """
        Execute the command.

        Returns:
            The process exit code (see constants.EXIT_*).
        """
        ...
