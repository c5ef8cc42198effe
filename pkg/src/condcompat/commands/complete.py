"""``complete``: fill unknown entries so that the pair becomes compatible."""

from __future__ import annotations

import argparse
from pathlib import Path

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.completion import (
    CompletionResult,
    ExactUnique,
    ForcedColumn,
    KnownColumnsInconsistent,
    Underdetermined,
    complete,
)
from condcompat.config import AppConfig
from condcompat.constants import EXIT_INCONSISTENT, EXIT_OK
from condcompat.io import dump_instance, load_instance
from condcompat.report import Report


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("column numbers start at 1")
    return value


def report_completion(report: Report, result: CompletionResult) -> None:
    diagnostics = result.diagnostics
    report.field("diagnostics", diagnostics.label)
    for name, cells in (("b", result.filled_cells_b), ("a", result.filled_cells_a)):
        for (i, j), value in sorted(cells.items()):
            report.value(f"{name}[{i + 1},{j + 1}]", value)
    if result.eta is not None:
        report.vector("eta", result.eta)

    if isinstance(diagnostics, KnownColumnsInconsistent):
        for j, eta in diagnostics.candidates.items():
            if eta is not None:
                report.vector(f"candidate[{j + 1}].eta", eta)
        for detail in diagnostics.details:
            report.note(detail)
    elif isinstance(diagnostics, Underdetermined):
        report.field("free_parameters", diagnostics.free_parameters)
        if diagnostics.reason:
            report.note(diagnostics.reason)
    elif isinstance(diagnostics, ForcedColumn):
        report.field("forced_column", diagnostics.column + 1)

    if result.verdict is not None:
        report.field("verified", result.verdict.label)
    if result.is_exact or isinstance(diagnostics, ForcedColumn):
        report.matrix("A", result.filled_a.rows())
        report.matrix("B", result.filled_b.rows())


class CompleteCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "complete"

    @property
    def help(self) -> str:
        return "Fill '?' entries of A and/or B under the assumption of compatibility."

    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        parser.add_argument("input", help="instance file with '?' entries")
        parser.add_argument(
            "--force-column",
            type=_positive_int,
            metavar="J",
            help="solve eta from known column J of A alone (1-based)",
        )
        parser.add_argument(
            "--output", "-o", help="write the completed instance to this file"
        )

    def run(self, args: argparse.Namespace, report: Report) -> int:
        instance = load_instance(args.input)
        force = args.force_column - 1 if args.force_column is not None else None
        logger.info(f"Completing {args.input}")

        result = complete(instance.a, instance.b, force)
        report_completion(report, result)

        filled = isinstance(result.diagnostics, (ExactUnique, ForcedColumn))
        if filled and args.output:
            text = dump_instance(result.filled_a, result.filled_b, name=instance.name)
            Path(args.output).write_text(text, encoding="utf-8")
            logger.info(f"Wrote completed instance to {args.output}")
        return EXIT_OK if filled else EXIT_INCONSISTENT
