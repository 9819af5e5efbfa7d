"""Exact construction and verification of current-algebra evaluation modules."""

from .rational import Q, rat, parse_rat, format_rat
from .linalg import Mat, rref, kernel_basis, SpanTracker, algebra_closure
from .poly import Poly, lagrange_interpolant
from .liealg import GL, SP, SO, FAMILIES, LieAlgebraSpec, build_lie_algebra
from .modules import (
    GModule,
    standard_module,
    trivial_module,
    tensor_module,
    build_irrep,
    isotypic_decompose,
    casimir_eigenvalue,
    commutant_basis,
    commutant_dimension,
)
from .currents import (
    InvariantTensor,
    CurrentOperator,
    EvaluationModule,
    evaluation_action,
    theta_operator,
    current_operator_matrix,
    invariant_operator_matrix,
)
from .invariants import (
    Permutation,
    all_permutations,
    casimir_tensor,
    theta_sigma_gl,
    theta_cycle_gl,
    theta_sigma_sp,
    psi_sigma_so,
    fft_tensors,
    schur_weyl_polys,
)
from .verify import CheckReport, run_acceptance_suite

__version__ = "0.1.0"
