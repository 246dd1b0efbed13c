import sys

import numpy as np
import pytest

from polariton_tst.model import CavitySetup, Mode, ReactionParams

TEST_POINT = ReactionParams(omega=1.0, omega_b=0.5, e_a=0.0, eta=0.1, eta_b=0.1)
TEST_CAVITY = CavitySetup(omega_c=1.0, n_molecules=1, mode=Mode.INCOHERENT, beta=10.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20211019)


def random_params(rng, eta_max=0.3, n_max=1):
    """Random (ReactionParams, CavitySetup) pair on physically sensible ranges."""
    rp = ReactionParams(
        omega=float(rng.uniform(0.2, 3.0)),
        omega_b=float(rng.uniform(0.1, 2.0)),
        e_a=float(rng.uniform(0.0, 2.0)),
        eta=float(rng.uniform(0.0, eta_max)),
        eta_b=float(rng.uniform(0.0, eta_max)),
    )
    cs = CavitySetup(
        omega_c=float(rng.uniform(0.1, 5.0)),
        n_molecules=int(rng.integers(1, n_max + 1)),
        mode=Mode.COHERENT if rng.random() < 0.5 else Mode.INCOHERENT,
        beta=float(rng.uniform(0.1, 50.0)),
    )
    return rp, cs


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
