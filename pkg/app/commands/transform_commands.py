"""
Transform Commands

Frobenius substitution, exponent-assignment searches over a square-free seed
and the exhaustive Frobenius-constancy classification.
"""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import List

from app.commands.base_command import BaseCommand
from app.commands.command_registry import register_command
from app.config import settings
from app.schemas.report import FrobeniusFamilyReport, FrobeniusReport, SearchReport
from app.services.construction_service import VerdictPath
from app.services.report_service import (
    build_frobenius_family_report,
    build_frobenius_report,
    build_search_report,
)


def exponent_list(text: str) -> List[int]:
    """`2,2,2,2` → [2, 2, 2, 2]"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_path(parser: ArgumentParser) -> None:
    parser.add_argument("--path", choices=[p.value for p in VerdictPath], default=VerdictPath.COMBINATORIAL.value,
                        help="how each candidate is decided")


@register_command("frobenius")
class FrobeniusCommand(BaseCommand):
    help = "apply X_j -> X_j^(a_j) and print the image in ideal-file form"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--exps", type=exponent_list, required=True, help="a1,...,an with every a_j >= 1")

    def execute(self, args: Namespace) -> FrobeniusReport:
        doc = self.load_document(args.ideal)
        return build_frobenius_report(doc, args.exps)

    def render_text(self, report: FrobeniusReport) -> str:
        return report.text.rstrip("\n")


@register_command("search")
class SearchCommand(BaseCommand):
    help = "decide generalized CM for every exponent assignment on a square-free seed"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--bound", type=int, default=settings.SEARCH_BOUND, help="largest exponent tried")
        parser.add_argument("--tuples", type=int, default=settings.SEARCH_TUPLES, help="tuples per generator")
        _add_path(parser)

    def execute(self, args: Namespace) -> SearchReport:
        doc = self.load_document(args.ideal)
        return build_search_report(doc.to_ideal(), args.bound, args.tuples, self.field_for(args, doc),
                                   VerdictPath(args.path), args.parallel)

    def render_text(self, report: SearchReport) -> str:
        lines = [
            f"{report.assignments} assignments, {report.orbits} orbits, {report.positives} generalized CM"
        ]
        lines.extend(f"  {', '.join(e.ideal)}" for e in report.entries if e.gcm)
        return "\n".join(lines)


@register_command("frobenius-family")
class FrobeniusFamilyCommand(BaseCommand):
    help = "check generalized CM ⟺ Frobenius constancy on (X_1..X_n)(X_n+1..X_2n)"

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--n", type=int, default=2, help="half the number of variables")
        parser.add_argument("--bound", type=int, default=settings.SEARCH_BOUND, help="largest exponent tried")
        _add_path(parser)

    def execute(self, args: Namespace) -> FrobeniusFamilyReport:
        return build_frobenius_family_report(args.n, args.bound, self.field_for(args), VerdictPath(args.path),
                                             args.parallel)

    def render_text(self, report: FrobeniusFamilyReport) -> str:
        if report.holds is None:
            return f"skipped: {report.skipped_reason}"
        verdict = "holds" if report.holds else f"fails at {report.counterexample}"
        return f"Frobenius classification {verdict} ({report.positives}/{report.checked} generalized CM)"
