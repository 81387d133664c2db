"""
Exception hierarchy

Input problems derive from InputError (a ValueError) and map to exit code 2 /
HTTP 422. TheoremViolation signals that two computations which a theorem says
must agree did not, i.e. an internal bug; it maps to exit code 1 / HTTP 500.
"""

from typing import Optional, Sequence


class HochsterError(Exception):
    """Base class for all errors raised by the package"""


class InputError(HochsterError, ValueError):
    """Invalid user input"""


class ConstantGenerator(InputError):
    """The constant monomial 1 was given as a generator (R would be 0)"""


class LengthMismatch(InputError):
    """An exponent sequence does not have the ambient length n"""


class NonPositiveExponent(InputError):
    """A Frobenius or assignment exponent is below 1"""


class NotSquareFree(InputError):
    """A square-free ideal was required"""


class NotAFace(InputError):
    """A subset that must be a face of the complex is not one"""


class DimensionMismatch(InputError):
    """A characterization was requested outside its dimension"""


class PreconditionViolation(InputError):
    """An operation was called outside its documented precondition"""


class SeedNotGeneralizedCM(InputError):
    """The seed of an exponent search is not generalized Cohen-Macaulay"""


class IdealParseError(InputError):
    """Syntax error in an ideal file, positioned by line and column"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")


class IndexOutOfRange(IdealParseError):
    """A variable index is outside 1..n"""


class ZeroExponent(IdealParseError):
    """An explicit exponent of 0 was written"""


class TheoremViolation(HochsterError, RuntimeError):
    """Two results that must agree by a theorem disagree"""

    def __init__(self, message: str, index: Optional[int] = None,
                 degree: Optional[Sequence[int]] = None):
        self.index = index
        self.degree = tuple(degree) if degree is not None else None
        details = []
        if index is not None:
            details.append(f"i={index}")
        if degree is not None:
            details.append(f"a={list(self.degree)}")
        suffix = f" ({', '.join(details)})" if details else ""
        super().__init__(f"{message}{suffix}")
