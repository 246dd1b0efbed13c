import numpy as np
import pytest
import sympy as sp
from numpy.testing import assert_allclose, assert_array_equal

from conftest import random_params
from polariton_tst.hessian import (
    Kind,
    barrier_hessian,
    barrier_hessian_coherent,
    barrier_hessian_incoherent,
    barrier_hessian_single,
    symmetric,
    well_hessian,
    well_hessian_collective,
    well_hessian_single,
)
from polariton_tst.model import CavitySetup, Mode, ReactionParams, coupling_g

RP = ReactionParams(omega=1.0, omega_b=0.5, eta=0.1, eta_b=0.1)
CS = CavitySetup(omega_c=1.0)


def test_symmetric_mirrors_upper_triangle():
    m = symmetric([[1, 2, 3], [99, 4, 5], [99, 99, 6]])
    assert_array_equal(m, m.T)
    assert m[2, 0] == 3


def test_well_single_example():
    m, kind = well_hessian_single(RP, CS)
    assert_allclose(m, [[1.04, 0.2], [0.2, 1.0]], rtol=1e-15)
    assert kind.tag is Kind.WELL_SINGLE and kind.dark_modes == 0


def test_well_single_decoupled():
    m, _ = well_hessian_single(ReactionParams(omega=1.3, eta=0.0), CavitySetup(omega_c=0.7))
    assert_array_equal(m, np.diag([1.3**2, 0.7**2]))


def test_barrier_single_example():
    m, kind = barrier_hessian_single(RP, CS)
    assert_allclose(m, [[-0.21, 0.2], [0.2, 1.0]], rtol=1e-14)
    assert kind.tag is Kind.BARRIER_SINGLE and kind.dark_modes == 0
    m0, _ = barrier_hessian_single(ReactionParams(omega_b=0.5, eta_b=0.0), CS)
    assert_array_equal(m0, np.diag([-0.25, 1.0]))


def test_collective_well_examples():
    one = CavitySetup(omega_c=1.0, n_molecules=1)
    assert_array_equal(well_hessian_collective(RP, one)[0], well_hessian_single(RP, one)[0])
    m, kind = well_hessian_collective(RP, CavitySetup(omega_c=1.0, n_molecules=4))
    assert_allclose(m, [[1.16, 0.4], [0.4, 1.0]], rtol=1e-14)
    assert kind.dark_modes == 3


def test_incoherent_barrier_example():
    m, kind = barrier_hessian_incoherent(RP, CavitySetup(omega_c=1.0, n_molecules=2))
    assert_allclose(m, [[-0.21, 0.04, 0.2], [0.04, 1.04, 0.2], [0.2, 0.2, 1.0]], rtol=1e-14)
    assert kind.tag is Kind.BARRIER_INCOHERENT and kind.dark_modes == 0
    assert np.linalg.det(m) == pytest.approx(-0.25, rel=1e-12)
    m0, _ = barrier_hessian_incoherent(
        ReactionParams(omega=1.0, omega_b=0.5, eta=0, eta_b=0), CavitySetup(n_molecules=5))
    assert_array_equal(m0, np.diag([-0.25, 1.0, 1.0]))


def test_incoherent_single_molecule_delegates():
    m, kind = barrier_hessian_incoherent(RP, CS)
    assert m.shape == (2, 2) and kind.tag is Kind.BARRIER_SINGLE


def test_coherent_barrier_example():
    m, kind = barrier_hessian_coherent(RP, CavitySetup(omega_c=1.0, n_molecules=4, mode="coherent"))
    assert_allclose(m, [[-0.09, 0.4], [0.4, 1.0]], rtol=1e-13)
    assert kind.dark_modes == 3
    assert_array_equal(barrier_hessian_coherent(RP, CS)[0], barrier_hessian_single(RP, CS)[0])


def test_dispatch_dark_mode_counts():
    for n in (1, 2, 7):
        for mode in Mode:
            cs = CavitySetup(n_molecules=n, mode=mode)
            wk = well_hessian(RP, cs)[1]
            bk = barrier_hessian(RP, cs)[1]
            assert wk.dark_modes == n - 1
            if n == 1:
                assert bk.dark_modes == 0
            elif mode is Mode.COHERENT:
                assert bk.dark_modes == n - 1
            else:
                assert bk.dark_modes == n - 2


def test_determinants_symbolic():
    w, wb, wc, g, h, n = sp.symbols("omega omega_b omega_c g g_b N", positive=True)
    well = sp.Matrix([[w**2 + g**2 * wc**2, g * wc**2], [g * wc**2, wc**2]])
    bar = sp.Matrix([[-wb**2 + h**2 * wc**2, h * wc**2], [h * wc**2, wc**2]])
    gr = g * sp.sqrt(n - 1)
    a3 = sp.Matrix([
        [-wb**2 + h**2 * wc**2, gr * h * wc**2, h * wc**2],
        [gr * h * wc**2, w**2 + gr**2 * wc**2, gr * wc**2],
        [h * wc**2, gr * wc**2, wc**2],
    ])
    assert sp.simplify(well.det() - w**2 * wc**2) == 0
    assert sp.simplify(bar.det() + wb**2 * wc**2) == 0
    assert sp.simplify(a3.det() + wb**2 * w**2 * wc**2) == 0
    assert sp.simplify(a3.trace() - (-wb**2 + h**2 * wc**2 + wc**2 + w**2 + gr**2 * wc**2)) == 0


def test_invariants_random(rng):
    for _ in range(1000):
        rp, cs = random_params(rng, eta_max=0.5, n_max=64)
        w, wb, wc = rp.omega, rp.omega_b, cs.omega_c
        g = coupling_g(rp.eta, w, wc) * np.sqrt(cs.n_molecules)
        mw, _ = well_hessian(rp, cs)
        mb, kb = barrier_hessian(rp, cs)
        assert_array_equal(mw, mw.T)
        assert_array_equal(mb, mb.T)
        assert abs(np.linalg.det(mw) - w**2 * wc**2) <= 1e-13 * np.linalg.norm(mw) ** 2
        assert np.trace(mw) == pytest.approx(w**2 + wc**2 + g**2 * wc**2, rel=1e-14)
        # det(mb) cancels against products of the off-diagonal couplings
        scale = np.linalg.norm(mb) ** mb.shape[0]
        want = -(wb**2) * wc**2 * (w**2 if kb.tag is Kind.BARRIER_INCOHERENT else 1.0)
        assert abs(np.linalg.det(mb) - want) <= 1e-13 * scale
