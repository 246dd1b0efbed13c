"""Quantum TST rates and cavity-induced correction factors.

Every product of hyperbolic sines is evaluated as a sum of logarithms and
exponentiated once, so corrections stay finite at large ``beta * lambda``.

Dark modes at the bare frequency appear equally often in numerator and
denominator and are cancelled before anything is evaluated. What is left is
always four factors: the two well polaritons over the stable barrier
frequencies, padded with the bare well frequency when the barrier has a
single stable mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import CavitySetup, DomainError, Mode, ReactionParams, collective_coupling, coupling_g
from .spectrum import BarrierSpectrum, WellSpectrum, barrier_spectrum, well_spectrum

__all__ = [
    "CrossoverTemperature",
    "ChannelSpec",
    "CorrectionBreakdown",
    "log_sinh",
    "log1mexp",
    "k_tst_single",
    "k_centroid_tst",
    "zpe_shift_exact",
    "kappa",
    "log_kappa",
    "kappa_star",
    "kappa_gh",
    "kappa_zpe",
    "kappa_interpolated",
    "delta_g",
    "kappa_centroid",
    "correction_breakdown",
    "branching_ratio",
    "selectivity_estimate",
]

_LN2 = math.log(2.0)


class CrossoverTemperature(ArithmeticError):
    """The centroid tunnelling prefactor diverges at or below the crossover temperature.

    ``which`` names the offending frequency (``"omega_b"`` or
    ``"lambda_unstable"``) and ``frequency`` holds its value.
    """

    def __init__(self, which: str, frequency: float, beta: float):
        self.which = which
        self.frequency = frequency
        self.beta = beta
        super().__init__(
            f"{which} * beta / 2 = {frequency * beta / 2:.6g} >= pi: "
            f"at or below the crossover temperature"
        )


def log1mexp(a: float) -> float:
    """``log(1 - exp(-a))`` for ``a > 0`` without cancellation."""
    if a <= 0:
        raise DomainError(f"log1mexp needs a > 0, got {a}")
    if a < _LN2:
        return math.log(-math.expm1(-a))
    return math.log1p(-math.exp(-a))


def log_sinh(x: float) -> float:
    """``log(sinh(x))`` for ``x > 0``, finite for arbitrarily large x."""
    return x - _LN2 + log1mexp(2.0 * x)


def k_tst_single(omega: float, e_a: float, beta: float) -> float:
    """Single-mode quantum TST rate ``(2 / beta h) sinh(omega beta / 2) exp(-beta e_a)``.

    With hbar = 1, h = 2 pi.
    """
    if omega <= 0 or beta <= 0 or e_a < 0:
        raise DomainError("k_tst_single needs omega > 0, beta > 0, e_a >= 0")
    return math.exp(log_sinh(0.5 * omega * beta) - beta * e_a) / (math.pi * beta)


def _check_crossover(omega_b: float, lam_u: float, beta: float) -> None:
    for which, f in (("omega_b", omega_b), ("lambda_unstable", lam_u)):
        if 0.5 * f * beta >= math.pi:
            raise CrossoverTemperature(which, f, beta)


def k_centroid_tst(omega: float, omega_b: float, e_a: float, beta: float) -> float:
    """Centroid TST rate with the parabolic-barrier tunnelling prefactor.

    Raises
    ------
    CrossoverTemperature
        If ``omega_b * beta / 2 >= pi``.
    """
    if omega <= 0 or omega_b <= 0 or beta <= 0 or e_a < 0:
        raise DomainError("k_centroid_tst needs omega, omega_b, beta > 0 and e_a >= 0")
    _check_crossover(omega_b, 0.0, beta)
    x = 0.5 * omega_b * beta
    return omega_b / (2.0 * math.pi) * math.exp(log_sinh(0.5 * omega * beta) - beta * e_a) / math.sin(x)


def _factor_lists(ws: WellSpectrum, bs: BarrierSpectrum, omega: float):
    net_dark = ws.dark_count - bs.dark_count
    if net_dark not in (0, 1):
        raise ValueError(
            f"inconsistent dark-mode counts: well {ws.dark_count}, barrier {bs.dark_count}"
        )
    num = [ws.lambda_plus, ws.lambda_minus]
    den = list(bs.stable)
    # the bare reference divides by one sinh(omega); a spare well dark mode cancels it
    if net_dark == 0:
        den.append(omega)
    if len(num) != len(den):
        raise ValueError(f"mode bookkeeping mismatch: {len(num)} well vs {len(den)} barrier factors")
    return num, den


def _check_beta(beta: float) -> None:
    if not beta > 0:
        raise DomainError(f"beta must be > 0, got {beta}")


def zpe_shift_exact(ws: WellSpectrum, bs: BarrierSpectrum, omega: float) -> float:
    """Zero-point frequency shift ``S = sum(well) - sum(barrier stable) - omega``.

    Dark modes cancel; for the incoherent three-mode barrier the bare
    ``omega`` is absorbed by the spare well dark mode, leaving
    ``lambda_+ + lambda_- - lambda_b+ - lambda_b-``.
    """
    num, den = _factor_lists(ws, bs, omega)
    return math.fsum(num) - math.fsum(den)


def log_kappa(ws: WellSpectrum, bs: BarrierSpectrum, beta: float, omega: float) -> float:
    _check_beta(beta)
    num, den = _factor_lists(ws, bs, omega)
    return math.fsum(log_sinh(0.5 * beta * f) for f in num) - math.fsum(
        log_sinh(0.5 * beta * f) for f in den
    )


def kappa(ws: WellSpectrum, bs: BarrierSpectrum, beta: float, omega: float) -> float:
    """Cavity-induced correction to the quantum TST rate.

    Parameters
    ----------
    ws, bs : WellSpectrum, BarrierSpectrum
        Spectra computed for the same reaction and cavity parameters.
    beta : float
        Inverse temperature.
    omega : float
        Bare well frequency of the reference single-mode rate.

    Returns
    -------
    float
        ``prod sinh(beta lambda_i / 2)`` over the well polaritons divided by
        the same product over the stable barrier modes and the bare well mode.
    """
    return math.exp(log_kappa(ws, bs, beta, omega))


def kappa_star(ws: WellSpectrum, bs: BarrierSpectrum, beta: float, omega: float) -> float:
    """Correction factor with the zero-point exponent removed.

    Built from ``1 - exp(-beta lambda)`` factors, not by dividing
    :func:`kappa`, so that ``kappa = kappa_star * exp(beta S / 2)`` is a
    genuine check.
    """
    _check_beta(beta)
    num, den = _factor_lists(ws, bs, omega)
    return math.exp(
        math.fsum(log1mexp(beta * f) for f in num) - math.fsum(log1mexp(beta * f) for f in den)
    )


def kappa_gh(bs: BarrierSpectrum, omega_b: float) -> float:
    """Grote-Hynes factor ``lambda_unstable / omega_b`` (high-temperature limit)."""
    if omega_b <= 0:
        raise DomainError("omega_b must be > 0")
    return bs.lambda_unstable / omega_b


def kappa_zpe(s_shift: float, beta: float) -> float:
    _check_beta(beta)
    return math.exp(0.5 * beta * s_shift)


def kappa_interpolated(bs: BarrierSpectrum, omega_b: float, s_shift: float, beta: float) -> float:
    """Diagnostic ``kappa_gh * exp(beta S / 2)`` bridging both limits; never used as kappa."""
    return kappa_gh(bs, omega_b) * kappa_zpe(s_shift, beta)


def delta_g(kappa_value: float, beta: float) -> float:
    """Cavity-induced free-energy change, from ``kappa = exp(-beta dG)``."""
    if not kappa_value > 0:
        raise DomainError(f"kappa must be > 0, got {kappa_value}")
    _check_beta(beta)
    return -math.log(kappa_value) / beta


def kappa_centroid(ws: WellSpectrum, bs: BarrierSpectrum, beta: float, omega: float,
                   omega_b: float) -> float:
    """Correction factor for centroid TST.

    ``(lambda_u / omega_b) * sin(omega_b beta / 2) / sin(lambda_u beta / 2) * kappa``.

    Raises
    ------
    CrossoverTemperature
        If either ``omega_b beta / 2`` or ``lambda_u beta / 2`` reaches pi.
    """
    lam_u = bs.lambda_unstable
    _check_crossover(omega_b, lam_u, beta)
    ratio = math.sin(0.5 * omega_b * beta) / math.sin(0.5 * lam_u * beta)
    return lam_u / omega_b * ratio * kappa(ws, bs, beta, omega)


@dataclass(frozen=True)
class CorrectionBreakdown:
    """Every correction factor at one parameter point.

    ``kappa_centroid`` is ``None`` at or below the crossover temperature;
    ``crossover`` then names the frequency that crossed.
    """

    kappa: float
    kappa_star: float
    s_shift: float
    kappa_gh: float
    kappa_zpe: float
    kappa_centroid: float | None
    delta_g: float
    kappa_interp: float
    well: WellSpectrum
    barrier: BarrierSpectrum
    crossover: str | None = None


def correction_breakdown(rp: ReactionParams, cs: CavitySetup) -> CorrectionBreakdown:
    ws = well_spectrum(rp, cs)
    bs = barrier_spectrum(rp, cs)
    beta = cs.beta
    s = zpe_shift_exact(ws, bs, rp.omega)
    ln_k = log_kappa(ws, bs, beta, rp.omega)
    try:
        k_c = kappa_centroid(ws, bs, beta, rp.omega, rp.omega_b)
        crossed = None
    except CrossoverTemperature as exc:
        k_c = None
        crossed = exc.which
    return CorrectionBreakdown(
        kappa=math.exp(ln_k),
        kappa_star=kappa_star(ws, bs, beta, rp.omega),
        s_shift=s,
        kappa_gh=kappa_gh(bs, rp.omega_b),
        kappa_zpe=kappa_zpe(s, beta),
        kappa_centroid=k_c,
        delta_g=-ln_k / beta,
        kappa_interp=kappa_interpolated(bs, rp.omega_b, s, beta),
        well=ws,
        barrier=bs,
        crossover=crossed,
    )


@dataclass(frozen=True)
class ChannelSpec:
    """One reactive barrier sharing the reactant well with other channels."""

    omega_b: float
    eta_b: float
    e_a: float = 0.0

    def __post_init__(self):
        if not self.omega_b > 0:
            raise DomainError(f"omega_b must be > 0, got {self.omega_b}")
        if not self.e_a >= 0:
            raise DomainError(f"e_a must be >= 0, got {self.e_a}")
        if not self.eta_b >= 0:
            raise DomainError(f"eta_b must be >= 0, got {self.eta_b}")

    def reaction(self, omega: float, eta: float) -> ReactionParams:
        return ReactionParams(omega=omega, omega_b=self.omega_b, e_a=self.e_a, eta=eta, eta_b=self.eta_b)


def _log_rate(ch: ChannelSpec, omega: float, eta: float, cs: CavitySetup) -> float:
    # bare single-mode TST prefactors share omega and cancel in the ratio
    rp = ch.reaction(omega, eta)
    ws = well_spectrum(rp, cs)
    bs = barrier_spectrum(rp, cs)
    return log_kappa(ws, bs, cs.beta, omega) - cs.beta * ch.e_a


def branching_ratio(ch1: ChannelSpec, ch2: ChannelSpec, omega: float, eta: float,
                    cs: CavitySetup) -> float:
    """Fraction ``k1 / (k1 + k2)`` of reactions leaving through channel 1.

    Both channels share the reactant well ``(omega, eta)`` and the cavity
    ``cs``; each uses its full correction factor.
    """
    x = _log_rate(ch1, omega, eta, cs) - _log_rate(ch2, omega, eta, cs)
    # logistic function, written to avoid overflow for either sign of x
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def selectivity_estimate(ch1: ChannelSpec, ch2: ChannelSpec, omega: float,
                         cs: CavitySetup) -> float:
    """Perturbative ``Delta S / 2 - Delta E_a`` between channel 2 and channel 1.

    Positive values favour channel 2, so the branching ratio into channel 1
    is below one half.
    """
    wc = cs.omega_c

    def term(ch):
        g_b = coupling_g(ch.eta_b, omega, wc)
        if cs.mode is Mode.COHERENT:
            g_b = collective_coupling(g_b, cs.n_molecules)
        return g_b * g_b / (wc * wc + ch.omega_b**2)

    return 0.25 * wc**3 * (term(ch1) - term(ch2)) + (ch1.e_a - ch2.e_a)
