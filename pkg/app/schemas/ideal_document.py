from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Optional, Tuple

from app.config import settings
from app.exceptions import IdealParseError
from app.models.field import FieldSpec
from app.models.monomial import MonomialIdeal
from app.utils.ideal_parser import format_ideal, parse_ideal_text, parse_monomial


class IdealDocument(BaseModel):
    """An ideal as read from a file or request body: generators are kept as written"""
    n: int = Field(..., ge=1)
    gens: List[str] = Field(default_factory=list)
    field: Optional[str] = None
    name: Optional[str] = None
    linear_resolution: Optional[int] = Field(None, ge=1)
    # (line, column) of each generator in its source file; empty for request bodies
    positions: List[Tuple[int, int]] = Field(default_factory=list, exclude=True)

    @field_validator('field')
    @classmethod
    def check_field(cls, v):
        if v is not None:
            FieldSpec.parse(v)
        return v

    def to_ideal(self) -> MonomialIdeal:
        monomials = []
        for k, g in enumerate(self.gens):
            line, column = self.positions[k] if k < len(self.positions) else (0, 1)
            try:
                monomials.append(parse_monomial(g, self.n, line, column))
            except IdealParseError as e:
                if line:
                    raise
                raise type(e)(f"generator {k + 1} {g!r}: {e}", 0, e.column) from e
        return MonomialIdeal.from_exponents(self.n, [m.exponents for m in monomials])

    def field_spec(self, override: Optional[str] = None) -> FieldSpec:
        """Explicit override, then the document's field, then DEFAULT_FIELD"""
        return FieldSpec.parse(override or self.field or settings.DEFAULT_FIELD)

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal, **metadata) -> "IdealDocument":
        return cls(n=ideal.n, gens=[str(u) for u in ideal.gens], **metadata)

    def render(self) -> str:
        return format_ideal(self.to_ideal(), self.name, self.field, self.linear_resolution)


def parse_ideal(text: str) -> IdealDocument:
    parsed = parse_ideal_text(text)
    return IdealDocument(
        n=parsed.n,
        gens=parsed.gens,
        field=parsed.field,
        name=parsed.name,
        linear_resolution=parsed.linear_resolution,
        positions=list(parsed.positions),
    )


class IdealRequest(BaseModel):
    """HTTP body: either `text` in the ideal-file grammar or `n` plus generator strings"""
    text: Optional[str] = None
    n: Optional[int] = Field(None, ge=1)
    gens: List[str] = Field(default_factory=list)
    field: Optional[str] = None
    linear_resolution: Optional[int] = Field(None, ge=1)

    @model_validator(mode='after')
    def check_source(self):
        if self.text is None and self.n is None:
            raise ValueError("provide either `text` or `n` with `gens`")
        return self

    def document(self) -> IdealDocument:
        if self.text is not None:
            doc = parse_ideal(self.text)
        else:
            doc = IdealDocument(n=self.n, gens=self.gens)
        updates = {}
        if self.field is not None:
            updates["field"] = self.field
        if self.linear_resolution is not None:
            updates["linear_resolution"] = self.linear_resolution
        if updates:
            doc = doc.model_copy(update=updates)
            doc.field_spec()
        return doc


class FrobeniusRequest(IdealRequest):
    exps: List[int]


class KIndexRequest(IdealRequest):
    cap: Optional[int] = Field(None, ge=1)
