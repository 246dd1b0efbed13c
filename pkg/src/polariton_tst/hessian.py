"""Mass-weighted Hessians of the coupled molecule-cavity system.

Entries are squared frequencies. Dark modes (molecular combinations that do
not couple to the cavity and keep the bare frequency ``omega``) are never
written into a matrix; :class:`HessianKind` only records how many there are.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .model import CavitySetup, Mode, ReactionParams, collective_coupling, coupling_g

__all__ = [
    "Kind",
    "HessianKind",
    "symmetric",
    "well_hessian_single",
    "barrier_hessian_single",
    "well_hessian_collective",
    "barrier_hessian_incoherent",
    "barrier_hessian_coherent",
    "well_hessian",
    "barrier_hessian",
]


class Kind(enum.Enum):
    WELL_SINGLE = "well_single"
    BARRIER_SINGLE = "barrier_single"
    WELL_COLLECTIVE = "well_collective"
    BARRIER_INCOHERENT = "barrier_incoherent"
    BARRIER_COHERENT = "barrier_coherent"


@dataclass(frozen=True)
class HessianKind:
    tag: Kind
    dark_modes: int = 0


def symmetric(upper) -> np.ndarray:
    """Build a dense symmetric matrix from its upper triangle.

    ``upper`` is a square nested sequence; entries below the diagonal are
    ignored and mirrored from above, so the result is symmetric bit for bit.
    """
    m = np.array(upper, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    iu = np.triu_indices(m.shape[0], 1)
    m[(iu[1], iu[0])] = m[iu]
    return m


def _two_mode(diag: float, g: float, omega_c: float) -> np.ndarray:
    wc2 = omega_c * omega_c
    return symmetric([[diag + g * g * wc2, g * wc2], [0.0, wc2]])


def well_hessian_single(rp: ReactionParams, cs: CavitySetup):
    g = coupling_g(rp.eta, rp.omega, cs.omega_c)
    return _two_mode(rp.omega**2, g, cs.omega_c), HessianKind(Kind.WELL_SINGLE)


def barrier_hessian_single(rp: ReactionParams, cs: CavitySetup):
    g_b = coupling_g(rp.eta_b, rp.omega, cs.omega_c)
    return _two_mode(-rp.omega_b**2, g_b, cs.omega_c), HessianKind(Kind.BARRIER_SINGLE)


def well_hessian_collective(rp: ReactionParams, cs: CavitySetup):
    """Bright-mode well Hessian: the single-molecule form with g -> sqrt(N) g."""
    n = cs.n_molecules
    g_n = collective_coupling(coupling_g(rp.eta, rp.omega, cs.omega_c), n)
    return _two_mode(rp.omega**2, g_n, cs.omega_c), HessianKind(Kind.WELL_COLLECTIVE, n - 1)


def barrier_hessian_incoherent(rp: ReactionParams, cs: CavitySetup):
    """Three-mode barrier Hessian for one activated molecule among N.

    Rows are ordered (reactive molecule, bright mode of the other N-1
    molecules, cavity). For N = 1 this delegates to
    :func:`barrier_hessian_single`.
    """
    n = cs.n_molecules
    if n < 2:
        return barrier_hessian_single(rp, cs)
    wc2 = cs.omega_c**2
    g_b = coupling_g(rp.eta_b, rp.omega, cs.omega_c)
    g_rest = collective_coupling(coupling_g(rp.eta, rp.omega, cs.omega_c), n - 1)
    m = symmetric([
        [-rp.omega_b**2 + g_b * g_b * wc2, g_rest * g_b * wc2, g_b * wc2],
        [0.0, rp.omega**2 + g_rest * g_rest * wc2, g_rest * wc2],
        [0.0, 0.0, wc2],
    ])
    return m, HessianKind(Kind.BARRIER_INCOHERENT, n - 2)


def barrier_hessian_coherent(rp: ReactionParams, cs: CavitySetup):
    n = cs.n_molecules
    g_bn = collective_coupling(coupling_g(rp.eta_b, rp.omega, cs.omega_c), n)
    return _two_mode(-rp.omega_b**2, g_bn, cs.omega_c), HessianKind(Kind.BARRIER_COHERENT, n - 1)


def well_hessian(rp: ReactionParams, cs: CavitySetup):
    if cs.n_molecules == 1:
        return well_hessian_single(rp, cs)
    return well_hessian_collective(rp, cs)


def barrier_hessian(rp: ReactionParams, cs: CavitySetup):
    """Dispatch on molecule count and activation mode."""
    if cs.n_molecules == 1:
        return barrier_hessian_single(rp, cs)
    if cs.mode is Mode.COHERENT:
        return barrier_hessian_coherent(rp, cs)
    return barrier_hessian_incoherent(rp, cs)

