"""Singular loci of positively graded algebras over polynomial rings.

Exact computations over Q: Gröbner bases, polynomial matrices, border basis
schemes, positive A-algebras and their zero-section, vertex and fiber
singularities.
"""

from .ideals import Budget, BudgetExceeded, Ideal, groebner, krull_dimension
from .matrices import PolyMatrix, generic_rank, minors_ideal
from .polyring import ParseError, Polynomial, RingSpec, TermOrder
from .posalg import PositiveAlgebra, validate

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "Ideal",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PositiveAlgebra",
    "RingSpec",
    "TermOrder",
    "generic_rank",
    "groebner",
    "krull_dimension",
    "minors_ideal",
    "validate",
]
