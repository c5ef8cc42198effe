"""``gen``: a seeded random compatible instance."""

from __future__ import annotations

import argparse

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.commands.derive import write_or_attach
from condcompat.config import AppConfig
from condcompat.constants import EXIT_OK
from condcompat.io import dump_instance
from condcompat.model import derive_conditionals
from condcompat.oracle import Generator, random_joint
from condcompat.report import Report


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


class GenCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "gen"

    @property
    def help(self) -> str:
        return "Generate a random strictly positive joint and its conditionals."

    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        parser.add_argument("--seed", type=_seed, required=True)
        parser.add_argument(
            "--dims", type=int, nargs=2, metavar=("I", "J"), required=True
        )
        parser.add_argument("--output", "-o", help="instance file to write")
        parser.add_argument("--name", help="name recorded in the instance file")
        parser.set_defaults(max_weight=config.oracle.max_cell_weight)

    def run(self, args: argparse.Namespace, report: Report) -> int:
        i_max, j_max = args.dims
        g = Generator(args.seed, (i_max, j_max), max_weight=args.max_weight)
        p = random_joint(g)
        a, b = derive_conditionals(p)
        name = args.name or f"gen-{args.seed}-{i_max}x{j_max}"
        logger.info(f"Generated {name}")
        text = dump_instance(a, b, name=name, seed=args.seed, joint=p)
        write_or_attach(text, args.output, report)
        return EXIT_OK
