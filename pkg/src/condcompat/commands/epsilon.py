"""``epsilon``: how far an incompatible pair is from compatibility."""

from __future__ import annotations

import argparse
from fractions import Fraction

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.compat import min_epsilon
from condcompat.completion import epsilon_estimates
from condcompat.config import AppConfig
from condcompat.constants import EXIT_OK
from condcompat.io import load_instance
from condcompat.oracle import fit_grid_steps, grid_min_violation
from condcompat.report import Report


def _nonnegative_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("epsilon must be nonnegative")
    return value


def _grid_steps(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("the grid needs at least 1 step")
    return value


class EpsilonCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "epsilon"

    @property
    def help(self) -> str:
        return "Minimal epsilon with |D eta| <= epsilon, or epsilon-based estimates."

    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        parser.add_argument("input", help="instance file")
        parser.add_argument(
            "--epsilon",
            type=_nonnegative_fraction,
            metavar="Q",
            help="estimate a[1,2], a[2,2] of a 3x2 A at this epsilon",
        )
        parser.add_argument(
            "--grid-steps",
            type=_grid_steps,
            nargs="?",
            const=config.oracle.grid_steps,
            metavar="N",
            help="also report the brute-force bound on an N-step simplex grid "
            "(default N: %(const)s)",
        )

    def run(self, args: argparse.Namespace, report: Report) -> int:
        instance = load_instance(args.input)
        a, b = instance.a, instance.b

        if args.epsilon is not None:
            logger.info(f"Epsilon estimates for {args.input} at {args.epsilon}")
            estimate = epsilon_estimates(a, b, args.epsilon)
            report.value("epsilon", estimate.epsilon)
            report.vector("eta", estimate.eta)
            report.value("a[1,2]", estimate.alpha[0])
            report.value("a[2,2]", estimate.alpha[1])
            report.field("feasible", str(estimate.is_feasible).lower())
            for line in estimate.diagnostics:
                report.note(line)
            return EXIT_OK

        logger.info(f"Minimal epsilon for {args.input}")
        result = min_epsilon(a, b)
        report.value("epsilon_star", result.epsilon_star)
        report.vector("eta", result.eta)
        report.field("compatible", str(result.is_compatible).lower())
        if args.grid_steps is not None:
            steps = fit_grid_steps(args.grid_steps, a.dims[0])
            if steps < args.grid_steps:
                logger.warning(
                    f"Grid of {args.grid_steps} steps is too large for I={a.dims[0]}, "
                    f"using {steps}"
                )
                report.note(f"grid steps lowered from {args.grid_steps} to {steps}")
            bound = grid_min_violation(a, b, steps)
            report.value("grid_bound", bound)
            report.field("grid_steps", steps)
        return EXIT_OK
