# Two channels out of one well. The cavity can flip which one wins.
import numpy as np

from polariton_tst import CavitySetup
from polariton_tst.rates import ChannelSpec, branching_ratio, selectivity_estimate

ch1 = ChannelSpec(omega_b=0.5, eta_b=0.1)
wcs = np.linspace(0.05, 4.0, 80)
for eta_b2 in (0.10, 0.11, 0.12):
    ch2 = ChannelSpec(omega_b=1.2, eta_b=eta_b2)
    phi = np.array([branching_ratio(ch1, ch2, 1.0, 0.1, CavitySetup(omega_c=w, beta=5.0)) for w in wcs])
    flips = wcs[1:][np.diff(np.sign(phi - 0.5)) != 0]
    print(f"eta_b2={eta_b2:.2f}: phi1 from {phi[0]:.5f} to {phi[-1]:.5f}, crosses 1/2 at {flips.round(3)}")

# the perturbative estimate tells the sign at both ends
ch2 = ChannelSpec(omega_b=1.2, eta_b=0.12)
for wc in (0.05, 4.0):
    print(f"omega_c={wc}: selectivity estimate {selectivity_estimate(ch1, ch2, 1.0, CavitySetup(omega_c=wc)):+.2e}")
