"""``check``: decide compatibility of a fully known pair."""

from __future__ import annotations

import argparse

from loguru import logger

from condcompat.commands.base import BaseCommand
from condcompat.compat import (
    Agree,
    Disagree,
    check_lp,
    check_rank,
    cross_product_check,
)
from condcompat.config import AppConfig
from condcompat.constants import (
    EXIT_DISAGREEMENT,
    EXIT_INCOMPATIBLE,
    EXIT_OK,
    METHODS,
)
from condcompat.io import load_instance
from condcompat.model import (
    CompatibilityVerdict,
    CompatibleNonUnique,
    CompatibleUnique,
    zero_pattern_warnings,
)
from condcompat.report import Report


def report_verdict(
    report: Report, verdict: CompatibilityVerdict, prefix: str = ""
) -> None:
    report.field(f"{prefix}verdict", verdict.label)
    report.field(f"{prefix}rank", verdict.rank)
    if isinstance(verdict, CompatibleNonUnique):
        report.field(f"{prefix}kernel_dimension", len(verdict.kernel_basis))
    if not isinstance(verdict, (CompatibleUnique, CompatibleNonUnique)):
        return
    if verdict.marginals is not None:
        report.vector(f"{prefix}eta", verdict.marginals.eta)
        report.vector(f"{prefix}tau", verdict.marginals.tau)
    if verdict.joint is not None:
        report.matrix(f"{prefix}P", verdict.joint.entries)


class CheckCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "check"

    @property
    def help(self) -> str:
        return "Decide whether A = P(X|Y) and B = P(Y|X) are compatible."

    def add_arguments(self, parser: argparse.ArgumentParser, config: AppConfig) -> None:
        parser.add_argument("input", help="instance file without unknown entries")
        parser.add_argument(
            "--method",
            choices=METHODS,
            default=config.check.method,
            help="rank criterion, LP feasibility, or both (default: %(default)s)",
        )

    def run(self, args: argparse.Namespace, report: Report) -> int:
        instance = load_instance(args.input)
        a, b = instance.a, instance.b
        a.require_complete()
        b.require_complete()
        logger.info(f"Checking {args.input} ({a.dims[0]}x{a.dims[1]}, {args.method})")

        verdicts: dict[str, CompatibilityVerdict] = {}
        if args.method in ("rank", "both"):
            verdicts["rank"] = check_rank(a, b)
        if args.method in ("lp", "both"):
            verdicts["lp"] = check_lp(a, b)

        if len({v.is_compatible for v in verdicts.values()}) > 1:
            logger.error("Rank and LP criteria disagree")
            report.note("rank and LP criteria disagree")
            for method, verdict in verdicts.items():
                report_verdict(report, verdict, prefix=f"{method}.")
            return EXIT_DISAGREEMENT

        verdict = verdicts.get("rank") or verdicts["lp"]
        report_verdict(report, verdict)

        cross = cross_product_check(a, b)
        if isinstance(cross, Disagree):
            i, i2, j, j2 = cross.witness.one_based()
            report.field("cross_product", f"disagree at minor ({i},{i2},{j},{j2})")
        elif isinstance(cross, Agree):
            report.field("cross_product", f"agree ({cross.tested} minors)")
        else:
            report.field("cross_product", "inapplicable")

        for i, j in zero_pattern_warnings(a, b):
            logger.warning(f"Exactly one of a, b is zero at ({i + 1},{j + 1})")
            report.field("zero_pattern", f"({i + 1},{j + 1})")

        return EXIT_OK if verdict.is_compatible else EXIT_INCOMPATIBLE
