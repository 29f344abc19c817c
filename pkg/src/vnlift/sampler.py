"""Deterministic sampling of unitaries and states, plus the brute-force
measurement-invariance search used to cross-check rank verdicts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, ShapeError, Tolerance, as_matrix
from .measurement import VonNeumannMeasurement, from_unitary

_DEGENERACY_GAP = 1e-6


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), *key]))


def _gaussian_complex(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _unitary_from_gaussian(g: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    phase = d / np.abs(d)
    return q * phase[..., None, :]


def random_unitary(m: int, seed: int) -> np.ndarray:
    """Haar-ish unitary: QR of a complex Gaussian matrix with phase fix."""
    if m < 1:
        raise ValueError(f"dimension must be positive, got {m}")
    return _unitary_from_gaussian(_gaussian_complex(_rng(seed), (m, m)))


def random_density(d: int, seed: int) -> np.ndarray:
    """G G^dag normalized to unit trace, for complex Gaussian G."""
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    g = _gaussian_complex(_rng(seed), (d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _simplex_point(rng: np.random.Generator, k: int, min_gap: float = 0.02) -> np.ndarray:
    """Probability vector with all pairwise gaps >= min_gap, so the induced
    reduced-state spectrum is nondegenerate."""
    for _ in range(500):
        p = np.exp(rng.standard_normal(k))
        p /= p.sum()
        q = np.sort(p)
        if k == 1 or np.min(np.diff(q)) >= min_gap:
            return p
    raise RuntimeError(f"failed to sample a gapped probability vector of size {k}")


def random_classical_quantum(m: int, n: int, seed: int) -> np.ndarray:
    """sum_i p_i |phi_i><phi_i| (x) rho_i, invariant under the measurement
    built from the generating basis; marginal spectrum on side A is gapped."""
    if m < 2 or n < 2:
        raise ValueError("both local dimensions must be at least 2")
    rng = _rng(seed, 0)
    u = _unitary_from_gaussian(_gaussian_complex(rng, (m, m)))
    p = _simplex_point(rng, m)
    rho = np.zeros((m * n, m * n), dtype=complex)
    for i in range(m):
        proj = np.outer(u[i], u[i].conj())
        g = _gaussian_complex(rng, (n, n))
        block = g @ g.conj().T
        block /= np.trace(block).real
        rho += p[i] * np.kron(proj, block)
    return rho


def swap_subsystems(rho, m: int, n: int) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape != (m * n, m * n):
        raise ShapeError(f"state must be {m * n}x{m * n}, got {rho.shape}")
    return rho.reshape(m, n, m, n).transpose(1, 0, 3, 2).reshape(m * n, m * n)


def random_quantum_classical(m: int, n: int, seed: int) -> np.ndarray:
    """Swap image of a classical-quantum state on n (x) m."""
    return swap_subsystems(random_classical_quantum(n, m, seed), n, m)


def random_classical_classical(m: int, n: int, seed: int) -> np.ndarray:
    """sum_ij p_ij |phi_i><phi_i| (x) |psi_j><psi_j| with both marginals gapped."""
    if m < 2 or n < 2:
        raise ValueError("both local dimensions must be at least 2")
    rng = _rng(seed, 1)
    ua = _unitary_from_gaussian(_gaussian_complex(rng, (m, m)))
    ub = _unitary_from_gaussian(_gaussian_complex(rng, (n, n)))
    for _ in range(500):
        p = np.exp(rng.standard_normal((m, n)))
        p /= p.sum()
        pa, pb = np.sort(p.sum(axis=1)), np.sort(p.sum(axis=0))
        if np.min(np.diff(pa)) >= 0.02 and np.min(np.diff(pb)) >= 0.02:
            break
    else:
        raise RuntimeError("failed to sample a gapped joint probability table")
    rho = np.zeros((m * n, m * n), dtype=complex)
    for i in range(m):
        proj_a = np.outer(ua[i], ua[i].conj())
        for j in range(n):
            proj_b = np.outer(ub[j], ub[j].conj())
            rho += p[i, j] * np.kron(proj_a, proj_b)
    return rho


def partial_trace(rho, m: int, n: int, keep: str) -> np.ndarray:
    rho4 = as_matrix(rho).reshape(m, n, m, n)
    if keep == "a":
        return np.einsum("abcb->ac", rho4)
    if keep == "b":
        return np.einsum("abad->bd", rho4)
    raise ValueError(f"keep must be 'a' or 'b', got {keep!r}")


@dataclass(frozen=True)
class InvarianceReport:
    best_residual: float
    best_measurement: VonNeumannMeasurement
    trials: int
    reduced_spectrum_degenerate: bool


def _measured_residuals(rho4: np.ndarray, units: np.ndarray, side: str) -> np.ndarray:
    """Frobenius residual || channel(rho) - rho || for a batch of measurement
    unitaries (rows are measurement vectors) acting on one side."""
    if side == "left":
        d = np.einsum("zia,abcd,zic->zibd", units.conj(), rho4, units)
        out = np.einsum("zia,zibd,zic->zabcd", units, d, units.conj())
    else:
        d = np.einsum("zjb,abcd,zjd->zjac", units.conj(), rho4, units)
        out = np.einsum("zjb,zjac,zjd->zabcd", units, d, units.conj())
    diff = out - rho4[None]
    return np.sqrt(np.einsum("zabcd,zabcd->z", diff, diff.conj()).real)


def invariance_search(
    rho,
    m: int,
    n: int,
    side: str = "left",
    trials: int = 2000,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> InvarianceReport:
    """Minimize ||channel(rho) - rho||_F over random von Neumann measurements
    on one side, always including the eigenbasis of the relevant reduced
    state as a deterministic candidate."""
    rho = as_matrix(rho)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if rho.shape != (m * n, m * n):
        raise ShapeError(f"state must be {m * n}x{m * n}, got {rho.shape}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    d = m if side == "left" else n
    reduced = partial_trace(rho, m, n, keep="a" if side == "left" else "b")
    evals, evecs = np.linalg.eigh((reduced + reduced.conj().T) / 2.0)
    degenerate = bool(np.min(np.diff(np.sort(evals))) < _DEGENERACY_GAP)
    # Row i of a measurement unitary is the coefficient vector of |phi_i>.
    candidates = [evecs.T]
    # Per-trial generators keyed by (seed, trial) so parallel and serial
    # evaluation orders agree bit-for-bit.
    gaussians = np.stack(
        [_gaussian_complex(_rng(seed, 2, t), (d, d)) for t in range(trials)]
    )
    candidates.append(_unitary_from_gaussian(gaussians))
    units = np.concatenate([candidates[0][None], candidates[1]])
    rho4 = rho.reshape(m, n, m, n)
    residuals = _measured_residuals(rho4, units, side)
    best = int(np.argmin(residuals))
    return InvarianceReport(
        best_residual=float(residuals[best]),
        best_measurement=from_unitary(units[best], Tolerance(tol.rank_rel, 1e-8)),
        trials=trials,
        reduced_spectrum_degenerate=degenerate,
    )
