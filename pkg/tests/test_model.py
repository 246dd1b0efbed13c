import math

import pytest
from hypothesis import given, strategies as st

from polariton_tst.model import (
    CavitySetup,
    DomainError,
    Mode,
    ReactionParams,
    collective_coupling,
    coupling_g,
    couplings,
    eta_from_rabi,
    rabi_frequency,
)

pos = st.floats(min_value=1e-3, max_value=1e3)
eta_st = st.floats(min_value=0.0, max_value=1.0)


@pytest.mark.parametrize("eta, omega, omega_c, expected", [
    (0.1, 1.0, 1.0, 0.2),
    (0.0, 1.0, 2.0, 0.0),
    (0.1, 1.0, 4.0, 0.1),
])
def test_coupling_g(eta, omega, omega_c, expected):
    assert coupling_g(eta, omega, omega_c) == pytest.approx(expected, rel=1e-15, abs=0)


@pytest.mark.parametrize("omega, omega_c", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_coupling_g_domain(omega, omega_c):
    with pytest.raises(DomainError):
        coupling_g(0.1, omega, omega_c)


@pytest.mark.parametrize("eta, omega_c, expected", [(0.1, 1, 0.2), (0, 5, 0), (0.05, 2, 0.2)])
def test_rabi_frequency(eta, omega_c, expected):
    assert rabi_frequency(eta, omega_c) == pytest.approx(expected, rel=1e-15, abs=0)


@pytest.mark.parametrize("omega_r, omega_c, expected", [(0.2, 1, 0.1), (0, 1, 0), (0.2, 2, 0.05)])
def test_eta_from_rabi(omega_r, omega_c, expected):
    assert eta_from_rabi(omega_r, omega_c) == pytest.approx(expected, rel=1e-15, abs=0)


def test_eta_from_rabi_domain():
    with pytest.raises(DomainError):
        eta_from_rabi(0.2, 0.0)


def test_collective_coupling():
    assert collective_coupling(0.2, 1) == 0.2
    assert collective_coupling(0.2, 4) == pytest.approx(0.4, rel=1e-15)
    # sqrt(2) / 10 to 20 digits
    assert collective_coupling(0.1, 2) == pytest.approx(0.14142135623730950488, rel=1e-15)
    with pytest.raises(DomainError):
        collective_coupling(0.2, 0)


@given(g=st.floats(min_value=1e-3, max_value=1.0), n=st.integers(min_value=2, max_value=10_000))
def test_collective_coupling_additivity(g, n):
    lhs = collective_coupling(g, n) ** 2
    rhs = collective_coupling(g, n - 1) ** 2 + g * g
    assert lhs == pytest.approx(rhs, rel=1e-14)


@given(eta=eta_st, omega=pos, omega_c=pos, s=st.floats(min_value=1e-3, max_value=1e3))
def test_coupling_g_homogeneous(eta, omega, omega_c, s):
    assert coupling_g(eta, s * omega, s * omega_c) == pytest.approx(
        coupling_g(eta, omega, omega_c), rel=1e-14, abs=1e-300)


@given(eta=eta_st, omega_c=pos)
def test_rabi_round_trip(eta, omega_c):
    assert eta_from_rabi(rabi_frequency(eta, omega_c), omega_c) == pytest.approx(eta, rel=1e-15, abs=1e-300)


def test_coupling_set_invariants():
    rp = ReactionParams(omega=1.3, omega_b=0.5, eta=0.07, eta_b=0.11)
    cs = CavitySetup(omega_c=0.8)
    c = couplings(rp, cs)
    assert c.j_sq == pytest.approx(c.g * 0.8**2, rel=1e-15)
    assert c.b_param == pytest.approx(4 * 0.11**2 * 1.3, rel=1e-14)
    assert c.g_b == pytest.approx(coupling_g(0.11, 1.3, 0.8), rel=1e-15)


@pytest.mark.parametrize("kw", [
    dict(omega=0), dict(omega_b=-1), dict(e_a=-0.1), dict(eta=-0.1), dict(eta_b=-1e-9),
    dict(omega=math.nan),
])
def test_reaction_params_validation(kw):
    with pytest.raises(DomainError):
        ReactionParams(**kw)


@pytest.mark.parametrize("kw", [
    dict(omega_c=0), dict(beta=0), dict(n_molecules=0), dict(n_molecules=2.5),
    dict(n_molecules=True), dict(mode="sideways"),
])
def test_cavity_setup_validation(kw):
    with pytest.raises(DomainError):
        CavitySetup(**kw)


def test_mode_from_string():
    assert CavitySetup(mode="coherent").mode is Mode.COHERENT
