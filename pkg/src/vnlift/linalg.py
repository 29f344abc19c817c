"""Dense complex linear algebra substrate: tolerances, numerical rank, validation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ShapeError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class UnitarityError(ValueError):
    """A matrix required to be unitary is not, within tolerance."""


class BasisError(ValueError):
    """An operator basis fails a required structural property."""


class InvalidStateError(ValueError):
    """A purported quantum state fails a validity requirement."""


@dataclass(frozen=True)
class Tolerance:
    """Numerical cutoffs used throughout.

    rank_rel: relative singular-value cutoff for numerical rank.
    eq_abs: absolute cutoff for entrywise / Frobenius-norm comparisons.
    """

    rank_rel: float = 1e-9
    eq_abs: float = 1e-10

    def __post_init__(self):
        if not 0.0 < self.rank_rel < 1.0:
            raise ValueError(f"rank_rel must lie in (0, 1), got {self.rank_rel}")
        if self.eq_abs <= 0.0:
            raise ValueError(f"eq_abs must be positive, got {self.eq_abs}")


DEFAULT_TOL = Tolerance()


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex array, rejecting non-finite entries."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def numerical_rank(a, tol: Tolerance = DEFAULT_TOL) -> int:
    """Count singular values above rank_rel times the largest one.

    A matrix whose largest singular value is below eq_abs counts as zero.
    """
    a = as_matrix(a)
    if a.size == 0:
        raise ShapeError("rank of an empty matrix is undefined")
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] <= tol.eq_abs:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel * s[0]))


def is_hermitian(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"Hermiticity needs a square matrix, got {a.shape}")
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol.eq_abs)


def is_unitary(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    eye = np.eye(a.shape[0])
    return frobenius(a @ a.conj().T - eye) <= tol.eq_abs


@dataclass(frozen=True)
class DensityReport:
    hermitian: bool
    unit_trace: bool
    psd: bool
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return self.hermitian and self.unit_trace and self.psd


def validate_density(rho, tol: Tolerance = DEFAULT_TOL) -> DensityReport:
    """Check Hermiticity, unit trace, and positive semidefiniteness."""
    rho = as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"density matrix must be square, got {rho.shape}")
    herm = is_hermitian(rho, tol)
    unit_trace = abs(np.trace(rho) - 1.0) <= tol.eq_abs
    # Symmetrize before the Hermitian eigensolver to suppress round-off asymmetry.
    sym = (rho + rho.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(sym)[0])
    return DensityReport(
        hermitian=herm,
        unit_trace=bool(unit_trace),
        psd=min_eig >= -tol.eq_abs,
        min_eigenvalue=min_eig,
    )
