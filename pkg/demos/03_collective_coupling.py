# N molecules: incoherent (one molecule reacts) versus coherent (bright mode reacts).
from polariton_tst import CavitySetup, Mode, ReactionParams, correction_breakdown

rp = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1, eta_b=0.1)
print(" N   S_incoh     kappa_incoh  S_coh       kappa_coh")
for n in (1, 2, 4, 8, 16, 32):
    inc = correction_breakdown(rp, CavitySetup(omega_c=1.0, n_molecules=n, mode=Mode.INCOHERENT))
    coh = correction_breakdown(rp, CavitySetup(omega_c=1.0, n_molecules=n, mode=Mode.COHERENT))
    print(f"{n:2d}  {inc.s_shift:+.6f}  {inc.kappa:.6f}     {coh.s_shift:+.6f}  {coh.kappa:.6f}")

# the coherent case is a single molecule with eta scaled by sqrt(N)
n = 16
scaled = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1 * n**0.5, eta_b=0.1 * n**0.5)
print("coherent N=16:", correction_breakdown(rp, CavitySetup(n_molecules=n, mode="coherent")).kappa)
print("single, eta*4:", correction_breakdown(scaled, CavitySetup()).kappa)
