"""Exact construction and verification of affine connections on nilpotent and filiform Lie algebras."""

from .catalog import (
    LnFamilyParams,
    VerificationReport,
    closed_form_checks,
    heisenberg_connection,
    ln_connection,
    ln_representation,
    verify_paper,
)
from .connections import (
    AffineConnection,
    Completeness,
    SymplecticForm,
    affine_rep,
    check_symplectic,
    connection_from_rep,
    is_complete,
    left_operator,
    make_connection,
    right_operator,
    symplectic_connection,
)
from .exact_linalg import (
    Matrix,
    MultiPoly,
    Subspace,
    char_poly,
    generalized_eigenspace,
    generic_vector,
    is_nilpotent_matrix,
    kernel_basis,
    rational_eigenvalues,
    rref,
)
from .lie_core import (
    CentralSeries,
    LieAlgebra,
    abelian,
    bracket,
    center,
    from_brackets,
    heisenberg,
    is_filiform,
    lower_central_series,
    make_lie_algebra,
    model_filiform,
    nilpotency_index,
)
from .representations import (
    Representation,
    WeightDecomposition,
    faithful_by_center,
    is_nilpotent_rep,
    make_representation,
    nilpotentize,
    rep_kernel,
    weight_decomposition,
)

__version__ = "0.1.0"
