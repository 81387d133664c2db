"""
Analysis Commands

Subcommands that read one ideal file and report on its local cohomology:
the full table, generalized CM verdicts, the combinatorial dim-2/dim-3 tests,
Hilbert series, the radical comparison and the k-Buchsbaum index.
"""

from argparse import ArgumentParser, Namespace

from pydantic import BaseModel

from app.commands.base_command import BaseCommand
from app.commands.command_registry import register_command
from app.schemas.report import AnalysisReport, CharacterizationReport, GcmVerdict, KIndexInfo
from app.services.characterization_service import check_dim2, check_dim3
from app.services.report_service import (
    build_analysis_report,
    build_characterization_report,
    build_gcm_verdict,
    build_hilbert_report,
    build_radical_report,
    k_index_info,
)
from app.services.cech_service import k_buchsbaum_index


def _flag(value: bool) -> str:
    return "true" if value else "false"


@register_command("analyze")
class AnalyzeCommand(BaseCommand):
    help = "full local cohomology table with invariants and bound checks"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--no-k-index", action="store_true", help="skip the k-Buchsbaum search")
        parser.add_argument("--cap", type=int, default=None, help="k-Buchsbaum search cap")

    def execute(self, args: Namespace) -> AnalysisReport:
        doc = self.load_document(args.ideal)
        K = self.field_for(args, doc)
        self.logger.info(f"Analyzing {args.ideal} over {K.label}")
        return build_analysis_report(doc, K, args.parallel, with_k_index=not args.no_k_index, cap=args.cap)

    def render_text(self, report: AnalysisReport) -> str:
        lines = [
            f"ideal: {', '.join(report.ideal.gens)} (n={report.ideal.n})",
            f"field: {report.field}",
            f"dim {report.dim}, depth {report.depth}",
            "table:",
        ]
        lines.extend(f"  H^{e.i} F={e.F} box={e.box}: {e.dim}" for e in report.table)
        lines.append(f"a: {report.a}")
        lines.append(f"b: {report.b}")
        lines.append(f"reg: {report.reg}")
        lines.append(f"flc: {[_flag(f) for f in report.flc]}")
        lines.append(f"generalized CM: {_flag(report.gcm)}, CM: {_flag(report.cm)}")
        if report.k_index is not None:
            lines.append(f"k-index: {report.k_index}")
        for name, passed in report.checks.items():
            lines.append(f"check {name}: {'n/a' if passed is None else _flag(passed)}")
        return "\n".join(lines)


@register_command("check-gcm")
class CheckGcmCommand(BaseCommand):
    help = "decide generalized Cohen-Macaulay (finite length below dim)"

    def execute(self, args: Namespace) -> GcmVerdict:
        doc = self.load_document(args.ideal)
        return build_gcm_verdict(doc, self.field_for(args, doc), args.parallel)

    def render_text(self, report: GcmVerdict) -> str:
        return f"generalized CM: {_flag(report.gcm)} (dim {report.dim}, depth ≥ {report.depth}, field {report.field})"


class CharacterizationCommand(BaseCommand):
    """Shared body of the combinatorial dimension tests"""

    check = None

    def execute(self, args: Namespace) -> CharacterizationReport:
        doc = self.load_document(args.ideal)
        result = type(self).check(doc.to_ideal())
        return build_characterization_report(doc, self.name, result)

    def render_text(self, report: CharacterizationReport) -> str:
        text = f"{report.test}: {_flag(report.holds)}"
        if not report.holds:
            text += f" (fails {report.clause} at σ={report.witness_sigma}, a={report.witness_a})"
        return text


@register_command("check-dim2")
class CheckDim2Command(CharacterizationCommand):
    help = "combinatorial generalized CM test for dim S/I = 2"
    check = staticmethod(check_dim2)


@register_command("check-dim3")
class CheckDim3Command(CharacterizationCommand):
    help = "combinatorial generalized CM test for dim S/I = 3"
    check = staticmethod(check_dim3)


@register_command("hilbert")
class HilbertCommand(BaseCommand):
    help = "multigraded Hilbert series of each H^i as rational functions"

    def execute(self, args: Namespace) -> BaseModel:
        doc = self.load_document(args.ideal)
        return build_hilbert_report(doc, self.field_for(args, doc), args.parallel)

    def render_text(self, report) -> str:
        if not report.series:
            return "all local cohomology vanishes"
        return "\n".join(f"H^{i}: {s}" for i, s in report.series.items())


@register_command("radical-compare")
class RadicalCompareCommand(BaseCommand):
    help = "compare H^i(S/I) with H^i(S/√I) at representatives with empty positive support"

    def execute(self, args: Namespace) -> BaseModel:
        doc = self.load_document(args.ideal)
        return build_radical_report(doc, self.field_for(args, doc))

    def render_text(self, report) -> str:
        agree = "agree" if not report.mismatches else f"{len(report.mismatches)} mismatches"
        return (
            f"radical: {', '.join(report.radical.gens)}\n"
            f"dimensions {agree} over {report.compared} degrees\n"
            f"generalized CM: {_flag(report.gcm)} (radical {_flag(report.radical_gcm)})\n"
            f"CM: {_flag(report.cm)} (radical {_flag(report.radical_cm)})"
        )


@register_command("k-index")
class KIndexCommand(BaseCommand):
    help = "least k with m^k H^i = 0 for all i below dim"

    def add_arguments(self, parser: ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--cap", type=int, default=None, help="search cap (default sum(rho) - n + 1 + margin)")

    def execute(self, args: Namespace) -> KIndexInfo:
        doc = self.load_document(args.ideal)
        result = k_buchsbaum_index(doc.to_ideal(), self.field_for(args, doc), cap=args.cap, parallel=args.parallel)
        return k_index_info(result)

    def render_text(self, report: KIndexInfo) -> str:
        return str(report.value)
