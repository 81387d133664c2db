from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Optional
import logging

from pydantic import BaseModel

from app.config import settings
from app.exceptions import InputError
from app.models.field import FieldSpec
from app.schemas.ideal_document import IdealDocument, parse_ideal


class BaseCommand(ABC):
    """Base class for all CLI subcommands"""

    name: str = ""
    help: str = ""

    def __init__(self):
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def add_arguments(self, parser: ArgumentParser) -> None:
        """Subcommand-specific arguments; the global flags are added by the CLI"""
        parser.add_argument("ideal", help="path to an ideal file")

    @abstractmethod
    def execute(self, args: Namespace) -> BaseModel:
        """
        Run the command
        Returns the report model printed by the CLI
        """
        pass

    def render_text(self, report: BaseModel) -> str:
        """Human-readable output; subclasses override where a one-line verdict fits"""
        return report.model_dump_json(indent=2)

    def load_document(self, path: str) -> IdealDocument:
        file = Path(path)
        if not file.is_file():
            raise InputError(f"no such ideal file: {path}")
        self.logger.debug(f"Reading ideal file {file}")
        return parse_ideal(file.read_text())

    def field_for(self, args: Namespace, doc: Optional[IdealDocument] = None) -> FieldSpec:
        if doc is not None:
            return doc.field_spec(args.field)
        return FieldSpec.parse(args.field or settings.DEFAULT_FIELD)
