"""Leading-order (g^2) expansions of the polariton frequencies.

These are insight and calibration tools. Rate functions in :mod:`.rates`
never fall back to them.

Individual frequencies diverge at the vibrational resonance
``omega == omega_c``; those functions refuse to evaluate within
``RESONANCE_GUARD * omega**2`` of it. Sums and shifts stay regular there and
are never guarded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import CavitySetup, DomainError, Mode, ReactionParams, collective_coupling, coupling_g

__all__ = [
    "RESONANCE_GUARD",
    "ResonanceDivergence",
    "PerturbativeReport",
    "well_freqs_pert",
    "well_sum_pert",
    "barrier_freqs_pert",
    "zpe_shift_pert",
    "zpe_shift_pert_N",
    "three_mode_pert",
    "optimal_cavity_frequency",
    "lambda_unstable_exact_form",
    "perturbative_report",
]

RESONANCE_GUARD = 1e-3


class ResonanceDivergence(ArithmeticError):
    """A perturbative frequency was requested too close to resonance."""

    def __init__(self, omega: float, omega_c: float):
        self.omega = omega
        self.omega_c = omega_c
        super().__init__(
            f"|omega^2 - omega_c^2| = {abs(omega**2 - omega_c**2):.3g} is below the "
            f"resonance guard {RESONANCE_GUARD:g} * omega^2 (omega={omega}, omega_c={omega_c})"
        )


def _guard(omega: float, omega_c: float) -> float:
    delta = omega * omega - omega_c * omega_c
    if abs(delta) < RESONANCE_GUARD * omega * omega:
        raise ResonanceDivergence(omega, omega_c)
    return delta


def _well_g(rp: ReactionParams, cs: CavitySetup) -> float:
    return collective_coupling(coupling_g(rp.eta, rp.omega, cs.omega_c), cs.n_molecules)


def _barrier_g(rp: ReactionParams, cs: CavitySetup) -> float:
    # only the coherent picture scales the barrier coupling with N
    g_b = coupling_g(rp.eta_b, rp.omega, cs.omega_c)
    if cs.mode is Mode.COHERENT:
        return collective_coupling(g_b, cs.n_molecules)
    return g_b


def well_freqs_pert(rp: ReactionParams, cs: CavitySetup) -> tuple[float, float]:
    """Perturbative well polaritons ``(lambda_plus, lambda_minus)``.

    ``lambda_plus`` continues from the dressed molecular frequency
    ``omega_e = sqrt(omega^2 + g^2 omega_c^2)`` and ``lambda_minus`` from the
    cavity frequency, so below resonance ``lambda_minus`` is the larger one.

    Raises
    ------
    ResonanceDivergence
        If ``|omega^2 - omega_c^2| < RESONANCE_GUARD * omega^2``.
    """
    w, wc = rp.omega, cs.omega_c
    delta = _guard(w, wc)
    gwc2 = (_well_g(rp, cs) * wc) ** 2
    w_e = math.sqrt(w * w + gwc2)
    lam_plus = w_e + gwc2 * wc * wc / (2.0 * w * delta)
    lam_minus = wc - gwc2 * wc / (2.0 * delta)
    return lam_plus, lam_minus


def well_sum_pert(rp: ReactionParams, cs: CavitySetup) -> float:
    w, wc = rp.omega, cs.omega_c
    g = _well_g(rp, cs)
    return w + wc + (g * wc) ** 2 / (2.0 * (w + wc))


def barrier_freqs_pert(rp: ReactionParams, cs: CavitySetup) -> tuple[float, float]:
    """Perturbative ``(lambda_b, lambda_unstable)`` of the two-mode barrier."""
    wb, wc = rp.omega_b, cs.omega_c
    gwc2 = (_barrier_g(rp, cs) * wc) ** 2
    denom = 2.0 * (wb * wb + wc * wc)
    return wc + gwc2 * wc / denom, wb - gwc2 * wb / denom


def zpe_shift_pert(rp: ReactionParams, cs: CavitySetup) -> float:
    """Leading-order zero-point frequency shift.

    ``S = (omega_c^3 / 2) [g^2 / (omega_c^2 + omega_c omega)
    - g_b^2 / (omega_c^2 + omega_b^2)]``. In the incoherent picture the
    result is independent of N at this order, so N = 1 couplings are used.
    """
    if cs.mode is Mode.INCOHERENT and cs.n_molecules > 1:
        return zpe_shift_pert_N(rp, cs)
    w, wb, wc = rp.omega, rp.omega_b, cs.omega_c
    g, g_b = _well_g(rp, cs), _barrier_g(rp, cs)
    return 0.5 * wc**3 * (g * g / (wc * wc + wc * w) - g_b * g_b / (wc * wc + wb * wb))


def zpe_shift_pert_N(rp: ReactionParams, cs: CavitySetup) -> float:
    """Incoherent N-molecule shift, equal to the single-molecule value."""
    single = CavitySetup(cs.omega_c, 1, Mode.INCOHERENT, cs.beta)
    return zpe_shift_pert(rp, single)


def three_mode_pert(rp: ReactionParams, cs: CavitySetup, region: str = "barrier"):
    """Leading-order frequencies of the three-mode (reactive, bright, cavity) model.

    Returns ``(reactive, cavity, bright)``. For ``region="barrier"`` the
    reactive entry is the unstable frequency magnitude and the other two are
    the stable barrier modes ``lambda_b+`` and ``lambda_b-``. For
    ``region="well"`` the reactive mode has the bare frequency ``omega``.

    Every term carrying the bright-mode coupling has an
    ``omega^2 - omega_c^2`` denominator, guarded in both regions.
    """
    n = cs.n_molecules
    if n < 2:
        raise DomainError("the three-mode model needs n_molecules >= 2")
    w, wb, wc = rp.omega, rp.omega_b, cs.omega_c
    g = coupling_g(rp.eta, w, wc)
    g_rest2 = collective_coupling(g, n - 1) ** 2
    delta = _guard(w, wc)
    bright = w + 0.5 * wc * wc * g_rest2 * w / delta
    if region == "barrier":
        g_b2 = coupling_g(rp.eta_b, w, wc) ** 2
        reactive = wb - (wc * wc / (2.0 * wb)) * g_b2 * wb * wb / (wb * wb + wc * wc)
        cavity = wc + 0.5 * wc**3 * (g_b2 / (wc * wc + wb * wb) + g_rest2 / (-delta))
    elif region == "well":
        reactive = w + 0.5 * wc * wc * g * g * w / delta
        cavity = wc + 0.5 * wc**3 * (g * g + g_rest2) / (-delta)
    else:
        raise ValueError(f"region must be 'well' or 'barrier', got {region!r}")
    return reactive, cavity, bright


def optimal_cavity_frequency(rp: ReactionParams) -> float:
    """Cavity frequency that minimises the unstable barrier frequency.

    Positive root of ``2 omega_c^2 + B omega_c - 2 omega_b^2 = 0`` with
    ``B = g_b^2 omega_c = 4 eta_b^2 omega``.
    """
    b = 4.0 * rp.eta_b**2 * rp.omega
    return (-b + math.sqrt(b * b + 16.0 * rp.omega_b**2)) / 4.0


def lambda_unstable_exact_form(rp: ReactionParams, cs: CavitySetup) -> float:
    """Exact single-molecule unstable frequency in closed form.

    ``lambda^2 = sqrt(Omega^4 + 4 omega_b^2 omega_c^2) / 2 - Omega^2 / 2``
    with ``Omega^2 = omega_c^2 - omega_b^2 + B omega_c``. The difference is
    rewritten as a quotient to avoid cancellation when ``Omega^2 > 0``.
    """
    wb, wc = rp.omega_b, cs.omega_c
    b = 4.0 * rp.eta_b**2 * rp.omega
    big2 = wc * wc - wb * wb + b * wc
    root = math.sqrt(big2 * big2 + 4.0 * wb * wb * wc * wc)
    if big2 > 0:
        lam2 = 2.0 * wb * wb * wc * wc / (root + big2)
    else:
        lam2 = 0.5 * (root - big2)
    return math.sqrt(lam2)


@dataclass(frozen=True)
class PerturbativeReport:
    """All perturbative outputs for one parameter point.

    ``lambda_plus_p`` and ``lambda_minus_p`` are ``None`` (and ``valid`` is
    false) when the resonance guard fired.
    """

    lambda_plus_p: float | None
    lambda_minus_p: float | None
    lambda_b_p: float
    lambda_unstable_p: float
    sum_well_p: float
    s_shift_p: float
    valid: bool


def perturbative_report(rp: ReactionParams, cs: CavitySetup) -> PerturbativeReport:
    try:
        lp, lm = well_freqs_pert(rp, cs)
        valid = True
    except ResonanceDivergence:
        lp = lm = None
        valid = False
    lb, lu = barrier_freqs_pert(rp, cs)
    return PerturbativeReport(lp, lm, lb, lu, well_sum_pert(rp, cs), zpe_shift_pert(rp, cs), valid)
