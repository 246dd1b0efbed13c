"""Normal-mode frequencies of the well and barrier Hessians.

Two independent routes are provided. :func:`eigvals_2x2` is the closed form
used for every two-mode configuration; :func:`eig_symmetric` is a cyclic
Jacobi solver that knows nothing about the closed form and serves both as the
cross-check and as the solver for the three-mode incoherent barrier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hessian import barrier_hessian, well_hessian
from .model import CavitySetup, ReactionParams, collective_coupling, coupling_g

__all__ = [
    "ConvergenceError",
    "SpectrumError",
    "WellSpectrum",
    "BarrierSpectrum",
    "eigvals_2x2",
    "eig_symmetric",
    "well_spectrum",
    "barrier_spectrum",
    "frequency_sum_exact",
]

DEFAULT_TOL = 1e-14
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


class SpectrumError(RuntimeError):
    """The eigenvalue signs do not match the expected well/barrier structure."""


@dataclass(frozen=True)
class WellSpectrum:
    lambda_plus: float
    lambda_minus: float
    dark_freq: float
    dark_count: int = 0

    @property
    def stable(self) -> tuple[float, float]:
        return (self.lambda_plus, self.lambda_minus)


@dataclass(frozen=True)
class BarrierSpectrum:
    """Barrier normal modes.

    ``lambda_unstable`` is the magnitude of the single imaginary frequency.
    ``stable`` is sorted in descending order and has one entry for a two-mode
    barrier and two for the incoherent three-mode barrier.
    """

    stable: tuple[float, ...]
    lambda_unstable: float
    dark_freq: float
    dark_count: int = 0


def eigvals_2x2(m) -> tuple[float, float]:
    """Eigenvalues of a real symmetric 2x2 matrix, largest first.

    The root that would suffer cancellation is recovered from the
    determinant instead of from the difference ``mean - radius``.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"eigvals_2x2 needs a 2x2 matrix, got shape {m.shape}")
    a, b, c = float(m[0, 0]), float(m[0, 1]), float(m[1, 1])
    mean = 0.5 * (a + c)
    radius = math.hypot(0.5 * (a - c), b)
    det = a * c - b * b
    if mean >= 0:
        hi = mean + radius
        lo = det / hi if hi != 0 else 0.0
    else:
        lo = mean - radius
        hi = det / lo
    return hi, lo


def eig_symmetric(m, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> list[float]:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    m : array_like
        Square symmetric matrix of any size.
    tol : float
        Iteration stops once every off-diagonal entry is at most
        ``tol * ||m||_F``.
    max_sweeps : int
        Cap on full sweeps over the upper triangle.

    Returns
    -------
    list of float
        Eigenvalues sorted in descending order.

    Raises
    ------
    ConvergenceError
        If the off-diagonal part has not been annihilated after
        ``max_sweeps`` sweeps.
    """
    if tol <= 0:
        raise ValueError("tol must be > 0")
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    threshold = tol * np.linalg.norm(a)
    offdiag = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        if n < 2 or np.max(np.abs(a[offdiag])) <= threshold:
            return sorted(np.diag(a).tolist(), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = a[q, p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp, arq = a[r, p], a[r, q]
                    a[r, p] = a[p, r] = c * arp - s * arq
                    a[r, q] = a[q, r] = s * arp + c * arq
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def _eigvals(m) -> list[float]:
    if m.shape == (2, 2):
        return list(eigvals_2x2(m))
    return eig_symmetric(m)


def well_spectrum(rp: ReactionParams, cs: CavitySetup) -> WellSpectrum:
    m, kind = well_hessian(rp, cs)
    if rp.eta == 0:
        # bare modes exactly; sqrt(omega**2) need not round back to omega
        hi, lo = max(rp.omega, cs.omega_c), min(rp.omega, cs.omega_c)
        return WellSpectrum(hi, lo, rp.omega, kind.dark_modes)
    hi, lo = eigvals_2x2(m)
    if lo <= 0:
        raise SpectrumError(f"well Hessian is not positive definite (eigenvalue {lo})")
    return WellSpectrum(math.sqrt(hi), math.sqrt(lo), rp.omega, kind.dark_modes)


def barrier_spectrum(rp: ReactionParams, cs: CavitySetup) -> BarrierSpectrum:
    m, kind = barrier_hessian(rp, cs)
    if rp.eta == 0 and rp.eta_b == 0:
        stable = (cs.omega_c,) if m.shape == (2, 2) else tuple(sorted((rp.omega, cs.omega_c), reverse=True))
        return BarrierSpectrum(stable, rp.omega_b, rp.omega, kind.dark_modes)
    vals = _eigvals(m)
    negative = [v for v in vals if v < 0]
    if len(negative) != 1 or any(v == 0 for v in vals):
        raise SpectrumError(f"barrier Hessian must have exactly one negative eigenvalue, got {vals}")
    stable = tuple(math.sqrt(v) for v in vals if v > 0)
    return BarrierSpectrum(stable, math.sqrt(-negative[0]), rp.omega, kind.dark_modes)


def frequency_sum_exact(rp: ReactionParams, cs: CavitySetup) -> float:
    """Closed-form ``lambda_plus + lambda_minus`` of the (collective) well.

    ``sqrt(w_e^2 + w_c^2 + 2 sqrt(w_e^2 w_c^2 - J^4))``; the inner radicand
    is exactly ``(omega * omega_c)**2`` and is evaluated in that form.
    """
    g_n = collective_coupling(coupling_g(rp.eta, rp.omega, cs.omega_c), cs.n_molecules)
    wc2 = cs.omega_c**2
    we2 = rp.omega**2 + g_n * g_n * wc2
    return math.sqrt(we2 + wc2 + 2.0 * rp.omega * cs.omega_c)
