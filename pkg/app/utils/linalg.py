"""
Exact linear algebra over Q and GF(p)

Thin layer over sympy's DomainMatrix. Ranks over Q use fraction-free
(Bareiss-style) row reduction over ZZ; ranks over GF(p) use modular
elimination. Nothing here ever touches floating point.

Matrices enter as lists of integer rows; vectors produced by the kernel and
span helpers are lists of elements of `field.domain()`.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from app.exceptions import TheoremViolation
from app.models.field import FieldSpec

logger = logging.getLogger(__name__)

IntMatrix = Sequence[Sequence[int]]
Vector = List


def _shape(rows: IntMatrix, ncols: Optional[int]) -> Tuple[int, int]:
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if nrows else 0
    return nrows, ncols


def to_domain_matrix(rows: Sequence[Sequence], shape: Tuple[int, int], domain) -> DomainMatrix:
    converted = [[domain.convert(x) for x in row] for row in rows]
    return DomainMatrix(converted, shape, domain)


def transpose(rows: IntMatrix, ncols: Optional[int] = None) -> List[List[int]]:
    nrows, ncols = _shape(rows, ncols)
    return [[rows[r][c] for r in range(nrows)] for c in range(ncols)]


def exact_rank(rows: IntMatrix, field: FieldSpec, ncols: Optional[int] = None) -> int:
    """Rank of an integer matrix over `field`"""
    nrows, ncols = _shape(rows, ncols)
    if nrows == 0 or ncols == 0:
        return 0
    if all(x == 0 for row in rows for x in row):
        return 0
    domain = field.integer_domain()
    matrix = to_domain_matrix(rows, (nrows, ncols), domain)
    if field.is_rational:
        _, _, pivots = matrix.rref_den(method="FF")
    else:
        _, pivots = matrix.rref()
    return len(pivots)


def rref(rows: Sequence[Sequence], field: FieldSpec, ncols: Optional[int] = None
         ) -> Tuple[List[List], Tuple[int, ...]]:
    """Reduced row echelon form over the field, as element rows plus pivots"""
    nrows, ncols = _shape(rows, ncols)
    domain = field.domain()
    if nrows == 0 or ncols == 0:
        return [[domain.zero] * ncols for _ in range(nrows)], ()
    reduced, pivots = to_domain_matrix(rows, (nrows, ncols), domain).rref()
    return reduced.to_list(), tuple(pivots)


def kernel_basis(rows: Sequence[Sequence], field: FieldSpec, ncols: int) -> List[Vector]:
    """Basis of {x : M x = 0} for an nrows x ncols matrix"""
    domain = field.domain()
    reduced, pivots = rref(rows, field, ncols)
    pivot_row = {col: r for r, col in enumerate(pivots)}
    basis = []
    for free in range(ncols):
        if free in pivot_row:
            continue
        vector = [domain.zero] * ncols
        vector[free] = domain.one
        for col, r in pivot_row.items():
            vector[col] = -reduced[r][free]
        basis.append(vector)
    return basis


def independent_columns(columns: Sequence[Vector], field: FieldSpec, dim: int) -> List[Vector]:
    """A maximal linearly independent sub-list of `columns` (each of length dim)"""
    if not columns or dim == 0:
        return []
    as_rows = [[col[r] for col in columns] for r in range(dim)]
    _, pivots = rref(as_rows, field, len(columns))
    return [list(columns[c]) for c in pivots]


def coordinates_in_basis(basis: Sequence[Vector], target: Vector, field: FieldSpec) -> List:
    """Unique coefficients c with sum c_k basis_k = target; basis must be independent"""
    domain = field.domain()
    dim = len(target)
    if not basis:
        if any(not domain.is_zero(x) for x in target):
            raise TheoremViolation("vector is not in the span of an empty basis")
        return []
    augmented = [[vec[r] for vec in basis] + [target[r]] for r in range(dim)]
    reduced, pivots = rref(augmented, field, len(basis) + 1)
    if len(basis) in pivots:
        raise TheoremViolation("vector is not in the span of the given basis")
    coeffs = [domain.zero] * len(basis)
    for r, col in enumerate(pivots):
        coeffs[col] = reduced[r][len(basis)]
    return coeffs


def apply_matrix(rows: Sequence[Sequence], vector: Vector, field: FieldSpec) -> Vector:
    """M v for an integer or field-element matrix and a field vector"""
    domain = field.domain()
    out = []
    for row in rows:
        acc = domain.zero
        for x, v in zip(row, vector):
            if x:
                acc += domain.convert(x) * v
        out.append(acc)
    return out


def compose(left: Sequence[Sequence], right: Sequence[Sequence], field: FieldSpec,
            inner: int) -> List[List]:
    """left (p x inner) times right (inner x q) over the field"""
    domain = field.domain()
    p = len(left)
    q = len(right[0]) if right else 0
    if p == 0 or q == 0 or inner == 0:
        return [[domain.zero] * q for _ in range(p)]
    product = to_domain_matrix(left, (p, inner), domain) * to_domain_matrix(right, (inner, q), domain)
    return product.to_list()


def is_zero_matrix(rows: Sequence[Sequence], field: FieldSpec) -> bool:
    domain = field.domain()
    return all(domain.is_zero(domain.convert(x)) for row in rows for x in row)
