from .field import FieldSpec
from .monomial import Monomial, MonomialIdeal
from .simplicial_complex import MultiDegree, SimplicialComplex
from .cohomology_table import LocalCohomologyTable, RepresentativeDegree

__all__ = [
    "FieldSpec",
    "Monomial",
    "MonomialIdeal",
    "MultiDegree",
    "SimplicialComplex",
    "LocalCohomologyTable",
    "RepresentativeDegree",
]
