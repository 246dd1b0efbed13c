# Single molecule in a cavity: polaritons, zero-point shift and the rate correction.
import numpy as np

from polariton_tst import CavitySetup, ReactionParams, correction_breakdown

rp = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1, eta_b=0.1)

# one point first
br = correction_breakdown(rp, CavitySetup(omega_c=1.0, beta=10.0))
print("well polaritons   ", br.well.lambda_plus, br.well.lambda_minus)
print("barrier modes     ", br.barrier.stable, "unstable", br.barrier.lambda_unstable)
print("S                 ", br.s_shift)
print("kappa             ", br.kappa)
print("kappa_gh, kappa_zpe", br.kappa_gh, br.kappa_zpe)
print("delta G           ", br.delta_g)

# now scan the cavity frequency at a few temperatures
wcs = np.linspace(0.25, 4.0, 151)
for beta in (1.0, 5.0, 10.0):
    k = np.array([correction_breakdown(rp, CavitySetup(omega_c=w, beta=beta)).kappa for w in wcs])
    i = k.argmin()
    print(f"beta={beta:4.1f}  min kappa {k[i]:.5f} at omega_c={wcs[i]:.3f}")

# high temperature tends to kappa_gh, low temperature to kappa_zpe
for beta in (0.1, 50.0):
    b = correction_breakdown(rp, CavitySetup(omega_c=1.0, beta=beta))
    print(f"beta={beta}: kappa/kappa_gh={b.kappa / b.kappa_gh:.5f}  kappa/kappa_zpe={b.kappa / b.kappa_zpe:.5f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for beta in (1.0, 5.0, 10.0):
        plt.plot(wcs, [correction_breakdown(rp, CavitySetup(omega_c=w, beta=beta)).kappa for w in wcs],
                 label=f"beta={beta:g}")
    plt.axhline(1.0, color="grey", lw=0.8, ls=":")
    plt.xlabel("omega_c")
    plt.ylabel("kappa")
    plt.legend()
    plt.savefig("single_molecule.png", dpi=120)
    print("wrote single_molecule.png")
