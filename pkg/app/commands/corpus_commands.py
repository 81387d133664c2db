"""
Corpus Commands

Dual-path oracle comparison over one ideal file or a seeded random corpus.
"""

from argparse import ArgumentParser, Namespace

from app.commands.base_command import BaseCommand
from app.commands.command_registry import register_command
from app.config import settings
from app.exceptions import TheoremViolation
from app.schemas.report import OracleCompareReport
from app.services.report_service import build_oracle_report
from app.tasks.corpus_tasks import random_corpus


@register_command("oracle-compare")
class OracleCompareCommand(BaseCommand):
    help = "compare Δ_a homology with degreewise Čech cohomology at every representative degree"

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("source", help="an ideal file, or `random` for a seeded corpus")
        parser.add_argument("--count", type=int, default=settings.CORPUS_COUNT, help="corpus size for `random`")
        parser.add_argument("--squarefree", action="store_true", help="draw square-free ideals only")

    def execute(self, args: Namespace) -> OracleCompareReport:
        if args.source == "random":
            seed = settings.CORPUS_SEED if args.seed is None else args.seed
            ideals = random_corpus(seed, args.count, squarefree=args.squarefree)
            K = self.field_for(args)
        else:
            doc = self.load_document(args.source)
            ideals = [doc.to_ideal()]
            K = self.field_for(args, doc)
        report = build_oracle_report(ideals, K, args.parallel)
        if report.mismatches:
            i, a, simplicial, cech = report.mismatches[0]
            self.logger.error(f"{len(report.mismatches)} oracle mismatches; first at i={i}, a={a}: "
                              f"{simplicial} vs {cech}")
            raise TheoremViolation("Δ_a homology and Čech cohomology differ", index=i, degree=a)
        return report

    def render_text(self, report: OracleCompareReport) -> str:
        return report.summary
