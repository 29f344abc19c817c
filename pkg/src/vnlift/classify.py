"""Necessary-condition screens for classicality of bipartite states.

A verdict can only RULE OUT membership in a classicality class; a passing
check is inconclusive, never a certificate of classicality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import gell_mann_basis
from .bloch import BlochForm, correlation_matrix
from .linalg import DEFAULT_TOL, InvalidStateError, Tolerance, numerical_rank

CLASSICAL_QUANTUM = "classical_quantum"
QUANTUM_CLASSICAL = "quantum_classical"
CLASSICAL_CLASSICAL = "classical_classical"


@dataclass(frozen=True)
class Verdict:
    target_class: str
    ruled_out: bool
    computed_rank: int
    threshold: int
    evidence: np.ndarray


def _verdict(target_class: str, evidence: np.ndarray, threshold: int, tol: Tolerance) -> Verdict:
    rank = numerical_rank(evidence, tol)
    return Verdict(
        target_class=target_class,
        ruled_out=rank > threshold,
        computed_rank=rank,
        threshold=threshold,
        evidence=evidence,
    )


def check_classical_quantum(bf: BlochForm, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Classical-quantum states have rank(R|T) at most m-1."""
    evidence = np.column_stack((bf.R, bf.T))
    return _verdict(CLASSICAL_QUANTUM, evidence, bf.m - 1, tol)


def check_quantum_classical(bf: BlochForm, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Quantum-classical states have rank(S|T^T) at most n-1."""
    evidence = np.column_stack((bf.S, bf.T.T))
    return _verdict(QUANTUM_CLASSICAL, evidence, bf.n - 1, tol)


def check_classical_classical(bf: BlochForm, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Classical-classical states have rank [[1, S^T], [R, T]] at most min(m, n)."""
    evidence = correlation_matrix(bf)
    return _verdict(CLASSICAL_CLASSICAL, evidence, min(bf.m, bf.n), tol)


def dakic_condition(bf: BlochForm, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Baseline screen: classical-quantum states have block correlation
    matrix rank at most m.  Strictly weaker than check_classical_quantum."""
    evidence = correlation_matrix(bf)
    return _verdict(CLASSICAL_QUANTUM, evidence, min(bf.m, bf.n), tol)


@dataclass(frozen=True)
class BellDiagonalSpec:
    """Two-qubit state with maximally mixed marginals, parameterized by the
    diagonal correlations (t1, t2, t3)."""

    t1: float
    t2: float
    t3: float

    def as_vector(self) -> np.ndarray:
        return np.array([self.t1, self.t2, self.t3])

    def eigenvalues(self) -> np.ndarray:
        t1, t2, t3 = self.t1, self.t2, self.t3
        return np.array(
            [
                (1 - t1 - t2 - t3) / 4.0,
                (1 - t1 + t2 + t3) / 4.0,
                (1 + t1 - t2 + t3) / 4.0,
                (1 + t1 + t2 - t3) / 4.0,
            ]
        )


@dataclass(frozen=True)
class BellDiagonalVerdict:
    quantum_quantum: bool
    separable: bool
    nonzero_correlations: int


def classify_bell_diagonal(
    spec: BellDiagonalSpec, tol: Tolerance = DEFAULT_TOL
) -> BellDiagonalVerdict:
    """Necessary-and-sufficient classification for Bell-diagonal states.

    The state carries nonzero quantum correlation exactly when more than one
    of the t_i is nonzero; it is separable exactly when (t1, t2, t3) lies in
    the octahedron |t1|+|t2|+|t3| <= 1.
    """
    if np.min(spec.eigenvalues()) < -tol.eq_abs:
        raise InvalidStateError(
            "correlations lie outside the Bell-diagonal state tetrahedron"
        )
    t = np.abs(spec.as_vector())
    tmax = float(t.max())
    if tmax <= tol.eq_abs:
        nonzero = 0
    else:
        nonzero = int(np.count_nonzero(t > tol.rank_rel * tmax))
    separable = float(t.sum()) <= 1.0 + tol.eq_abs
    return BellDiagonalVerdict(
        quantum_quantum=nonzero > 1,
        separable=separable,
        nonzero_correlations=nonzero,
    )


def check_rho2_family(t, m: int, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Screen the m (x) m family with R = S = 0 and T = diag(t) in the
    canonical basis.

    More than m-1 nonzero diagonal correlations rule out both one-sided
    classical classes; the two one-sided checks coincide here by symmetry, so
    the classical-quantum verdict is returned.
    """
    t = np.asarray(t, dtype=float)
    if t.shape != (m * m - 1,):
        raise ValueError(f"need {m * m - 1} diagonal correlations, got {t.shape}")
    b = gell_mann_basis(m)
    bf = BlochForm(
        m=m,
        n=m,
        R=np.zeros(m * m - 1),
        S=np.zeros(m * m - 1),
        T=np.diag(t),
        basis_a=b,
        basis_b=b,
    )
    return check_classical_quantum(bf, tol)
