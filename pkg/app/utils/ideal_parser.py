"""
Ideal file parser

Grammar (1-based variable indices):

    # comment
    ring n=4
    field gf:2              (optional)
    name I_1                (optional)
    linear_resolution 2     (optional, asserted metadata)
    gens
    x1*x3
    x1^2*x4

A compact one-line form `gens: x1*x3, x1^2*x4` is accepted in place of the
`gens` block. Errors carry the line and column of the offending token.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from app.exceptions import IdealParseError, IndexOutOfRange, ZeroExponent
from app.models.monomial import Monomial, MonomialIdeal

RING_RE = re.compile(r"^ring\s+n\s*=\s*(\d+)\s*$")
FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_monomial(text: str, n: int, line: int = 0, column: int = 1) -> Monomial:
    """`x1^2*x4` → Monomial; a lone `1` is the constant monomial"""
    exponents = [0] * n
    if text.strip() == "1":
        return Monomial(tuple(exponents))
    offset = 0
    for factor in text.split("*"):
        stripped = factor.strip()
        col = column + offset + (len(factor) - len(factor.lstrip()))
        offset += len(factor) + 1
        match = FACTOR_RE.match(stripped)
        if not match:
            raise IdealParseError(f"expected x<idx> or x<idx>^<exp>, got {stripped!r}", line, col)
        index = int(match.group(1))
        if not 1 <= index <= n:
            raise IndexOutOfRange(f"variable index {index} outside 1..{n}", line, col)
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if exponent == 0:
            raise ZeroExponent(f"exponent 0 in {stripped!r}", line, col)
        exponents[index - 1] += exponent
    return Monomial(tuple(exponents))


@dataclass
class ParsedIdeal:
    """Raw result of parsing before it is wrapped in an IdealDocument"""
    n: int
    gens: List[str]
    ideal: MonomialIdeal
    field: Optional[str] = None
    name: Optional[str] = None
    linear_resolution: Optional[int] = None
    positions: Tuple[Tuple[int, int], ...] = ()


def _split_compact(body: str, start_column: int) -> List[Tuple[str, int]]:
    out = []
    column = start_column
    for piece in body.split(","):
        lead = len(piece) - len(piece.lstrip())
        if piece.strip():
            out.append((piece.strip(), column + lead))
        column += len(piece) + 1
    return out


def parse_ideal_text(text: str) -> ParsedIdeal:
    n: Optional[int] = None
    field = None
    name = None
    linear_resolution = None
    in_gens = False
    gens: List[Tuple[str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip()) + 1

        if n is None:
            match = RING_RE.match(stripped)
            if not match:
                raise IdealParseError("expected header `ring n=<count>`", lineno, indent)
            n = int(match.group(1))
            if n < 1:
                raise IdealParseError("ring needs at least one variable", lineno, indent)
            continue

        if in_gens:
            gens.append((stripped, lineno, indent))
            continue

        keyword, _, rest = stripped.partition(" ")
        if stripped == "gens":
            in_gens = True
        elif stripped.startswith("gens:"):
            body_start = line.index("gens:") + len("gens:")
            for token, column in _split_compact(line[body_start:], body_start + 1):
                gens.append((token, lineno, column))
            in_gens = True
        elif keyword == "field":
            field = rest.strip()
        elif keyword == "name":
            name = rest.strip()
        elif keyword == "linear_resolution":
            if not rest.strip().isdigit():
                raise IdealParseError("linear_resolution expects a positive integer", lineno, indent)
            linear_resolution = int(rest.strip())
        else:
            raise IdealParseError(f"unexpected line {stripped!r}", lineno, indent)

    if n is None:
        raise IdealParseError("missing header `ring n=<count>`", 1, 1)
    if not in_gens:
        raise IdealParseError("missing `gens` section", 0, 0)

    monomials = [parse_monomial(token, n, lineno, column) for token, lineno, column in gens]
    ideal = MonomialIdeal.from_exponents(n, [m.exponents for m in monomials])
    return ParsedIdeal(n, [token for token, _, _ in gens], ideal, field, name, linear_resolution,
                       tuple((lineno, column) for _, lineno, column in gens))


def format_ideal(ideal: MonomialIdeal, name: Optional[str] = None, field: Optional[str] = None,
                 linear_resolution: Optional[int] = None) -> str:
    """Inverse of the parser: header, optional metadata, one generator per line"""
    lines = [f"ring n={ideal.n}"]
    if name:
        lines.append(f"name {name}")
    if field:
        lines.append(f"field {field}")
    if linear_resolution is not None:
        lines.append(f"linear_resolution {linear_resolution}")
    lines.append("gens")
    lines.extend(str(u) for u in ideal.gens)
    return "\n".join(lines) + "\n"
