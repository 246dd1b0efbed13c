"""Reaction and cavity parameters, and conversions between coupling forms.

Units follow hbar = 1 with every frequency expressed in a user-chosen
reference frequency (usually the bare vibrational frequency, so ``omega=1``).
Energies then share the same unit and ``beta`` is its inverse.

The light-matter strength is carried by the dimensionless ``eta``, which is
held fixed while the cavity frequency is tuned; the linear coupling ``g`` is
therefore a function of ``omega_c`` and is recomputed at every point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "Mode",
    "ReactionParams",
    "CavitySetup",
    "CouplingSet",
    "coupling_g",
    "rabi_frequency",
    "eta_from_rabi",
    "collective_coupling",
    "couplings",
]


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""


class Mode(str, enum.Enum):
    """How N molecules reach the transition state.

    ``INCOHERENT``: one molecule is activated while the others stay in the
    well. ``COHERENT``: the bright polariton mode crosses the barrier.
    """

    INCOHERENT = "incoherent"
    COHERENT = "coherent"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class ReactionParams:
    """Bare molecular quantities for one reaction channel.

    Attributes
    ----------
    omega : float
        Vibrational frequency in the reactant well.
    omega_b : float
        Magnitude of the imaginary barrier frequency.
    e_a : float
        Activation energy.
    eta, eta_b : float
        Light-matter strength in the well and at the barrier.
    """

    omega: float = 1.0
    omega_b: float = 0.5
    e_a: float = 0.0
    eta: float = 0.1
    eta_b: float = 0.1

    def __post_init__(self):
        _require(_finite(self.omega, self.omega_b, self.e_a, self.eta, self.eta_b),
                 "reaction parameters must be finite")
        _require(self.omega > 0, f"omega must be > 0, got {self.omega}")
        _require(self.omega_b > 0, f"omega_b must be > 0, got {self.omega_b}")
        _require(self.e_a >= 0, f"e_a must be >= 0, got {self.e_a}")
        _require(self.eta >= 0, f"eta must be >= 0, got {self.eta}")
        _require(self.eta_b >= 0, f"eta_b must be >= 0, got {self.eta_b}")


@dataclass(frozen=True)
class CavitySetup:
    """Cavity frequency, molecule count, activation mode and inverse temperature."""

    omega_c: float = 1.0
    n_molecules: int = 1
    mode: Mode = Mode.INCOHERENT
    beta: float = 10.0

    def __post_init__(self):
        _require(_finite(self.omega_c, self.beta), "cavity parameters must be finite")
        _require(self.omega_c > 0, f"omega_c must be > 0, got {self.omega_c}")
        _require(self.beta > 0, f"beta must be > 0, got {self.beta}")
        n = self.n_molecules
        _require(isinstance(n, int) and not isinstance(n, bool),
                 f"n_molecules must be an integer, got {n!r}")
        _require(n >= 1, f"n_molecules must be >= 1, got {n}")
        try:
            object.__setattr__(self, "mode", Mode(self.mode))
        except ValueError:
            raise DomainError(f"unknown mode {self.mode!r}") from None


@dataclass(frozen=True)
class CouplingSet:
    """All coupling representations at one cavity frequency.

    ``j_sq`` is g * omega_c**2 and ``b_param`` is g_b**2 * omega_c, which
    equals 4 * eta_b**2 * omega for the fixed-eta convention.
    """

    g: float
    g_b: float
    j_sq: float
    b_param: float


def coupling_g(eta: float, omega: float, omega_c: float) -> float:
    """Dimensionless coupling ``g = 2 eta sqrt(omega / omega_c)``."""
    _require(omega > 0 and omega_c > 0, "omega and omega_c must be > 0")
    _require(eta >= 0, f"eta must be >= 0, got {eta}")
    return 2.0 * eta * math.sqrt(omega / omega_c)


def rabi_frequency(eta: float, omega_c: float) -> float:
    """Rabi splitting ``2 omega_c eta``."""
    _require(omega_c > 0, "omega_c must be > 0")
    return 2.0 * omega_c * eta


def eta_from_rabi(omega_r: float, omega_c: float) -> float:
    """Inverse of :func:`rabi_frequency`, for reported Rabi splittings."""
    _require(omega_c > 0, "omega_c must be > 0")
    _require(omega_r >= 0, "omega_r must be >= 0")
    return omega_r / (2.0 * omega_c)


def collective_coupling(g: float, n: int) -> float:
    """Bright-mode coupling ``sqrt(n) * g`` of n identical molecules."""
    _require(n >= 1, f"n must be >= 1, got {n}")
    if n == 1:
        return g
    return g * math.sqrt(n)


def couplings(rp: ReactionParams, cs: CavitySetup) -> CouplingSet:
    g = coupling_g(rp.eta, rp.omega, cs.omega_c)
    g_b = coupling_g(rp.eta_b, rp.omega, cs.omega_c)
    return CouplingSet(
        g=g,
        g_b=g_b,
        j_sq=g * cs.omega_c**2,
        b_param=g_b**2 * cs.omega_c,
    )
