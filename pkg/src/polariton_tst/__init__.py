"""Quantum transition-state-theory corrections for reactions under
vibrational strong coupling to a cavity mode.

Typical use::

    from polariton_tst import ReactionParams, CavitySetup, correction_breakdown
    br = correction_breakdown(ReactionParams(omega_b=0.5), CavitySetup(omega_c=1.0, beta=10))
    br.kappa, br.kappa_gh, br.kappa_zpe
"""

from .hessian import HessianKind, Kind, barrier_hessian, well_hessian
from .model import (
    CavitySetup,
    CouplingSet,
    DomainError,
    Mode,
    ReactionParams,
    collective_coupling,
    coupling_g,
    couplings,
    eta_from_rabi,
    rabi_frequency,
)
from .perturbation import PerturbativeReport, ResonanceDivergence, perturbative_report
from .rates import (
    ChannelSpec,
    CorrectionBreakdown,
    CrossoverTemperature,
    branching_ratio,
    correction_breakdown,
    kappa,
    kappa_centroid,
    kappa_gh,
    kappa_star,
    kappa_zpe,
    selectivity_estimate,
    zpe_shift_exact,
)
from .spectrum import (
    BarrierSpectrum,
    WellSpectrum,
    barrier_spectrum,
    eig_symmetric,
    eigvals_2x2,
    frequency_sum_exact,
    well_spectrum,
)
from .sweep import RunConfig, SweepSpec, preset, run_sweep, write_csv

__version__ = "0.1.0"
