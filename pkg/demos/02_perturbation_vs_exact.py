# How good are the leading-order formulas? Compare with exact diagonalization.
import numpy as np

from polariton_tst import CavitySetup, ReactionParams
from polariton_tst import perturbation as pt
from polariton_tst.rates import correction_breakdown
from polariton_tst.spectrum import barrier_spectrum

for eta in (0.025, 0.05, 0.1):
    rp = ReactionParams(omega=1.0, omega_b=0.5, eta=eta, eta_b=eta)
    worst_abs = 0.0
    for wc in np.linspace(0.2, 3.0, 57):
        cs = CavitySetup(omega_c=wc)
        exact = correction_breakdown(rp, cs).s_shift
        worst_abs = max(worst_abs, abs(pt.zpe_shift_pert(rp, cs) - exact))
    print(f"eta={eta:<6} max |S_pert - S_exact| = {worst_abs:.2e}")
# each halving of eta should cut that by roughly 16

# S changes sign near omega_c = omega_b**2 / omega; relative error is meaningless there
rp = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1, eta_b=0.1)
for wc in (0.2, 0.25, 0.3, 1.0, 2.0):
    cs = CavitySetup(omega_c=wc)
    print(f"omega_c={wc:<5} S_exact={correction_breakdown(rp, cs).s_shift:+.6f}  S_pert={pt.zpe_shift_pert(rp, cs):+.6f}")

# individual polariton formulas blow up at resonance, the guard refuses
try:
    pt.well_freqs_pert(rp, CavitySetup(omega_c=1.0))
except pt.ResonanceDivergence as exc:
    print("refused:", exc)

# the cavity frequency that minimises the unstable frequency
root = pt.optimal_cavity_frequency(rp)
wcs = np.linspace(0.3, 0.7, 4001)
lam = [barrier_spectrum(rp, CavitySetup(omega_c=w)).lambda_unstable for w in wcs]
print(f"optimal omega_c: root {root:.6f}, scan {wcs[int(np.argmin(lam))]:.6f}")
