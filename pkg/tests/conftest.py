import numpy as np
import pytest

from magnon_torus import CouplingSet, Regime, preset


@pytest.fixture
def chain():
    return preset("chain")


@pytest.fixture
def fm_example():
    return CouplingSet(J=-1.0, D=0.0, r_aniso=-0.1, K=0.0, J_z=-1.0, B_field=0.0, regime=Regime.FM)


@pytest.fixture
def afm_example():
    return CouplingSet(J=1.0, D=0.0, r_aniso=0.0, K=0.1, J_z=1.0, B_field=0.0, regime=Regime.AFM)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
