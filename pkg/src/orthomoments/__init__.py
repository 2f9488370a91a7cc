"""Exact integrals of monomials over the orthogonal group O(N).

>>> from orthomoments import integrate, make_power_matrix
>>> str(integrate(make_power_matrix([[1, 1], [1, 1]])))
'-1/((N-1)N(N+2))'
"""

from .algebra import (
    PolynomialN,
    RationalFunctionN,
    evaluate_at,
    poch_half_constant,
    poch_integer_n,
    poch_shifted_n,
    render_expanded,
    render_factored,
)
from .errors import (
    DimensionTooSmall,
    DivisionByZero,
    GuardExceeded,
    IndexOutOfRange,
    InvalidExponent,
    OrthoMomentsError,
    ParseError,
    PoleAtN,
    RowSumMismatch,
    ShapeError,
)
from .integrator import (
    IntegratorConfig,
    MemoCache,
    integrate,
    one_vector_orthogonal,
    one_vector_unitary,
    recursion_reduce,
    two_vector_closed,
    two_vector_ullah,
)
from .oracle import MomentEstimate, exact_o1, exact_o2, exact_u1, mc_moment, wallis_moment
from .powermatrix import PowerMatrix, canonical_key, is_vanishing_by_parity, make_power_matrix

__all__ = [
    "PolynomialN", "RationalFunctionN", "evaluate_at", "poch_half_constant", "poch_integer_n",
    "poch_shifted_n", "render_expanded", "render_factored",
    "DimensionTooSmall", "DivisionByZero", "GuardExceeded", "IndexOutOfRange", "InvalidExponent",
    "OrthoMomentsError", "ParseError", "PoleAtN", "RowSumMismatch", "ShapeError",
    "IntegratorConfig", "MemoCache", "integrate", "one_vector_orthogonal", "one_vector_unitary",
    "recursion_reduce", "two_vector_closed", "two_vector_ullah",
    "MomentEstimate", "exact_o1", "exact_o2", "exact_u1", "mc_moment", "wallis_moment",
    "PowerMatrix", "canonical_key", "is_vanishing_by_parity", "make_power_matrix",
]
