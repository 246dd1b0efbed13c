# Centroid TST adds a tunnelling factor; it diverges at the crossover temperature.
import math

from polariton_tst import CavitySetup, ReactionParams, correction_breakdown
from polariton_tst.rates import k_centroid_tst, k_tst_single

rp = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1, eta_b=0.1)
print("crossover beta for omega_b=0.5:", 2 * math.pi / rp.omega_b)
for beta in (1.0, 5.0, 10.0, 12.0, 12.6, 15.0):
    br = correction_breakdown(rp, CavitySetup(omega_c=1.0, beta=beta))
    if br.kappa_centroid is None:
        print(f"beta={beta:5.1f}  kappa={br.kappa:.5f}  centroid undefined ({br.crossover} crossed)")
    else:
        ratio = k_centroid_tst(1.0, 0.5, 0.0, beta) / k_tst_single(1.0, 0.0, beta)
        print(f"beta={beta:5.1f}  kappa={br.kappa:.5f}  kappa_centroid={br.kappa_centroid:.5f}  tunnelling x{ratio:.3f}")
