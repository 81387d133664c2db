from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.domains.domain import Domain

from app.exceptions import InputError


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field K: the rationals (characteristic 0) or GF(p)"""
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not isprime(p):
            raise InputError(f"GF(p) requires a prime p, got {p}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts `q` or `gf:<p>` (case-insensitive)"""
        value = text.strip().lower()
        if value == "q":
            return cls.rationals()
        if value.startswith("gf:"):
            digits = value[3:]
            if digits.isdigit():
                return cls.prime(int(digits))
        raise InputError(f"Unknown field spec {text!r}; expected 'q' or 'gf:<p>'")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def label(self) -> str:
        return "Q" if self.is_rational else f"GF({self.characteristic})"

    @property
    def spec(self) -> str:
        return "q" if self.is_rational else f"gf:{self.characteristic}"

    def domain(self) -> Domain:
        """sympy domain carrying the field arithmetic"""
        return QQ if self.is_rational else GF(self.characteristic)

    def integer_domain(self) -> Domain:
        """Domain used for rank computations: ZZ (fraction-free) or GF(p)"""
        return ZZ if self.is_rational else GF(self.characteristic)

    def __str__(self) -> str:
        return self.label
