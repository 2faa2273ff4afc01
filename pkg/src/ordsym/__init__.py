"""Exact-arithmetic toolkit for order-symmetric polynomial spans, nil and
algebraicity certificates, and filtered/graded/Rees algebra checks over
finite-dimensional associative algebras."""

from .algebra import (
    AlgElement,
    BoundResult,
    ChainResult,
    InvalidAlgebraError,
    StructureAlgebra,
    ValidationReport,
    algebraic_degree,
    brute_force_nil_index,
    evaluate,
    sym_span_chain,
    sym_span_in,
    sym_values,
    uniform_algebraic_bound,
    uniform_nil_index,
)
from .catalog import builtin_example, builtin_names
from .fields import QQ, Field, Scalar, distinct_scalars, field_make
from .freealg import (
    FreePoly,
    linear_power,
    monomial_count,
    multidegrees,
    power_span_grid,
    sym_poly,
    sym_span,
    sym_span_upto,
    word_basis,
)
from .graded import (
    Filtration,
    GradedAlgebra,
    InvalidFiltrationError,
    NilVerification,
    associated_graded,
    graded_nil_index_bound,
    sym_degree_check,
    validate_filtration,
    verify_graded_nil_index,
)
from .linalg import Subspace, multi_vandermonde_recover, vandermonde_recover
from .rees import (
    IntegralWitness,
    IsoReport,
    PowerMembership,
    ReesElement,
    ScalarPoly,
    check_graded_rees_isomorphism,
    integral_power_in_x_ideal,
    integral_witness,
)

__version__ = "0.1.0"
