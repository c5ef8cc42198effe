"""``derive``: the conditionals of a joint, written as an instance file."""

from __future__ import annotations

import argparse
from pathlib import Path

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.config import AppConfig
from condcompat.constants import EXIT_OK
from condcompat.io import dump_instance, load_joint
from condcompat.model import derive_conditionals
from condcompat.report import Report


def write_or_attach(text: str, output: str | None, report: Report) -> None:
    """Write ``text`` to ``output``, or make it the command's stdout."""
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {output}")
        report.field("wrote", output)
    else:
        report.attach(text)


class DeriveCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "derive"

    @property
    def help(self) -> str:
        return "Derive A = P(X|Y) and B = P(Y|X) from a joint file."

    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        parser.add_argument("joint", help="joint file with a 'P' grid")
        parser.add_argument("--output", "-o", help="instance file to write")
        parser.add_argument("--name", help="name recorded in the instance file")

    def run(self, args: argparse.Namespace, report: Report) -> int:
        p = load_joint(args.joint)
        a, b = derive_conditionals(p)
        text = dump_instance(a, b, name=args.name, joint=p)
        write_or_attach(text, args.output, report)
        return EXIT_OK
