"""Von Neumann measurement lifts and rank-based screens for quantum
correlation in bipartite states."""

__version__ = "0.1.0"

from .basis import HermitianBasis, gell_mann_basis, pauli_gell_mann_basis, rotate_basis, verify_orthonormal
from .bloch import BlochForm, correlation_matrix, decompose, reconstruct
from .classify import (
    BellDiagonalSpec,
    BellDiagonalVerdict,
    Verdict,
    check_classical_classical,
    check_classical_quantum,
    check_quantum_classical,
    check_rho2_family,
    classify_bell_diagonal,
    dakic_condition,
)
from .linalg import (
    DEFAULT_TOL,
    BasisError,
    DensityReport,
    InvalidStateError,
    ShapeError,
    Tolerance,
    UnitarityError,
    is_hermitian,
    is_unitary,
    matmul,
    numerical_rank,
    validate_density,
)
from .measurement import (
    LiftedMeasurement,
    VonNeumannMeasurement,
    apply,
    build_C,
    build_C0,
    consistency_check,
    from_unitary,
    lift_matrix,
    lift_matrix_nonorthonormal,
)
from .sampler import (
    InvarianceReport,
    invariance_search,
    partial_trace,
    random_classical_classical,
    random_classical_quantum,
    random_density,
    random_quantum_classical,
    random_unitary,
    swap_subsystems,
)
