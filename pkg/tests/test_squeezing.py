import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magnon_torus import (DomainError, InstabilityError, SizeError, recursion_q, solve_squeezing,
                          squeezing_dispersions, squeezing_eigenstate, squeezing_entropy,
                          squeezing_parameter, vacuum_entropy)
from magnon_torus.oracle import build_squeezing_sector, diagonalize, entropy_from_vector
from magnon_torus.squeezing import default_cutoff

R_06 = math.log(4) / 4  # artanh(0.6) / 2


def _geometric_entropy(r):
    # independent oracle: Schmidt weights (1 - lam) lam^p summed directly
    lam = math.tanh(r) ** 2
    w = (1 - lam) * lam ** np.arange(4000)
    w = w[w > 0]
    return float(-np.sum(w * np.log(w)))


def test_no_squeezing():
    assert squeezing_parameter(0.0, 2.0) == 0.0


def test_parameter_example():
    assert squeezing_parameter(1.2, 2.0) == pytest.approx(R_06, abs=1e-15)
    assert R_06 == pytest.approx(0.34657, abs=1e-5)


@pytest.mark.parametrize("lam, omega", [(2.02, 2.0), (-2.0, 2.0), (1.0, -0.5)])
def test_instability(lam, omega):
    with pytest.raises(InstabilityError):
        squeezing_parameter(lam, omega)


def test_zero_omega():
    with pytest.raises(DomainError):
        solve_squeezing(0.0, 0.0, 0.1)


def test_dispersions_decoupled():
    assert squeezing_dispersions(0.0, 2.0, 0.5, 0.0) == pytest.approx((2.5, 1.5))


def test_dispersions_example():
    sol = solve_squeezing(2.0, 0.0, 1.2)
    assert (sol.omega_alpha, sol.omega_beta) == pytest.approx((1.6, 1.6), abs=1e-14)
    assert sol.vacuum_shift == pytest.approx(-0.4, abs=1e-14)


def test_gap_closes():
    sol = solve_squeezing(2.0, 0.0, 1.99)
    assert sol.omega_alpha == pytest.approx(math.sqrt(4 - 1.99 ** 2), rel=1e-12)
    assert 0 < sol.omega_alpha < 0.2


def test_recursion_initial_table():
    np.testing.assert_array_equal(recursion_q(0, 0, 1.3, 0.8, 10).values.astype(float), np.ones(11))


def test_recursion_first_difference_step():
    eta, zeta = math.cosh(0.7), math.sinh(0.7)
    q = recursion_q(0, 1, eta, zeta, 12).values.astype(float)
    np.testing.assert_allclose(q, np.sqrt(np.arange(13) + 1), rtol=1e-14)


def test_recursion_unsqueezed_pair_step():
    q = recursion_q(1, 0, 1.0, 0.0, 8).values.astype(float)
    np.testing.assert_array_equal(q, np.arange(9))


def test_recursion_bad_indices():
    with pytest.raises(SizeError):
        recursion_q(-1, 0, 1.0, 0.0, 4)


def test_vacuum_amplitudes():
    sol = solve_squeezing(2.0, 0.0, 1.2)
    state = squeezing_eigenstate(0, 0, sol)
    amps = state.amplitudes
    p = np.arange(len(amps))
    np.testing.assert_allclose(np.abs(amps), math.sqrt(8 / 9) * (1 / 3) ** p, rtol=1e-12, atol=1e-300)
    # the diagonalizing transformation makes the pair amplitudes alternate for omega > 0
    assert np.all(np.sign(amps[:10]) == (-1.0) ** p[:10])


def test_unsqueezed_vacuum():
    state = squeezing_eigenstate(0, 0, solve_squeezing(2.0, 0.3, 0.0))
    assert state.terms == ((0, 0, 1.0),)
    assert squeezing_entropy(state) == 0.0


def test_single_excitation_against_sector():
    sol = solve_squeezing(2.0, 0.0, 1.2)
    state = squeezing_eigenstate(1, 0, sol, cutoff=60)
    sector = build_squeezing_sector(1, 60, 2.0, 2.0, 1.2)
    w, v = diagonalize(sector)[0]
    assert w == pytest.approx(sol.vacuum_shift + sol.omega_alpha, abs=1e-10)
    amp = dict(((a, b), c) for a, b, c in state.terms)
    vec = np.array([amp[b] for b in sector.basis])
    assert min(np.max(np.abs(vec - v)), np.max(np.abs(vec + v))) < 1e-6


@pytest.mark.parametrize("r, expected", [
    (R_06, 9 / 8 * math.log(9 / 8) + 1 / 8 * math.log(8)),  # 0.3924361...
    (1.0, 1.6198220928977),
])
def test_vacuum_entropy_values(r, expected):
    sol = solve_squeezing(1.0, 0.0, math.tanh(2 * r))
    assert sol.r_squeeze == pytest.approx(r, abs=1e-12)
    s = squeezing_entropy(squeezing_eigenstate(0, 0, sol))
    assert s == pytest.approx(expected, abs=1e-12)
    assert vacuum_entropy(r) == pytest.approx(_geometric_entropy(r), abs=1e-12)


def test_vacuum_entropy_closed_form_at_small_r():
    r = R_06
    assert vacuum_entropy(r) == pytest.approx(9 / 8 * math.log(9 / 8) - 1 / 8 * math.log(1 / 8), abs=1e-14)


@pytest.mark.parametrize("P", [5, 20, 40])
def test_truncation_deficit(P):
    sol = solve_squeezing(2.0, 0.0, 1.2)
    state = squeezing_eigenstate(0, 0, sol, cutoff=P)
    assert state.norm_deficit == pytest.approx((1 / 9) ** (P + 1), rel=1e-9, abs=1e-17)
    assert state.norm == pytest.approx(1.0, abs=1e-14)


def test_default_cutoff_rule():
    lam = math.tanh(0.5) ** 2
    P = default_cutoff(0.5)
    assert lam ** (P + 1) < 1e-14 <= lam ** P


def test_default_cutoff_widened_for_excited_states():
    sol = solve_squeezing(1.0, 0.0, 0.95)
    state = squeezing_eigenstate(6, 6, sol)
    assert state.norm_deficit < 1e-12


def test_cap():
    sol = solve_squeezing(2.0, 0.0, 1.2)
    with pytest.raises(SizeError):
        squeezing_eigenstate(7, 0, sol)


def test_strong_squeezing_high_state_against_numpy():
    g = 0.9
    sol = solve_squeezing(1.0, 0.1, g)
    state = squeezing_eigenstate(6, 4, sol, cutoff=300)
    sector = build_squeezing_sector(2, 300, 1.1, 0.9, g)
    w, v = np.linalg.eigh(sector.entries)
    j = int(np.argmin(np.abs(w - (sol.vacuum_shift + 6 * sol.omega_alpha + 4 * sol.omega_beta))))
    vec = state.amplitudes
    assert min(np.max(np.abs(vec - v[:, j])), np.max(np.abs(vec + v[:, j]))) < 1e-10


ratios = st.floats(-0.95, 0.95)
quanta = st.integers(0, 3)


@given(ratios)
def test_parameter_identity(g):
    r = squeezing_parameter(g, 1.0)
    assert r == pytest.approx(0.5 * math.atanh(g), abs=1e-12)
    sol = solve_squeezing(1.0, 0.0, g)
    assert sol.eta ** 2 - sol.zeta ** 2 == pytest.approx(1.0, abs=1e-12)
    assert sol.r_squeeze >= 0


@given(st.floats(0.1, 5), st.floats(-2, 2), ratios)
def test_common_dispersion(omega, delta, g):
    sol = solve_squeezing(omega, delta, g * omega)
    common = math.sqrt(omega ** 2 - (g * omega) ** 2)
    assert 0.5 * (sol.omega_alpha + sol.omega_beta) == pytest.approx(common, rel=1e-10)
    assert sol.omega_alpha - sol.omega_beta == pytest.approx(2 * delta, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(quanta, quanta, st.floats(0.05, 0.8))
def test_number_difference_conserved(m, n, g):
    state = squeezing_eigenstate(m, n, solve_squeezing(1.0, 0.0, g))
    assert all(a - b == m - n for a, b, _ in state.terms)
    assert state.norm == pytest.approx(1.0, abs=1e-12)
    assert state.norm_deficit < 1e-12


@settings(max_examples=40, deadline=None)
@given(quanta, quanta, st.floats(0.05, 0.8), st.floats(0.2, 5))
def test_depends_only_on_ratio(m, n, g, scale):
    a = squeezing_entropy(squeezing_eigenstate(m, n, solve_squeezing(1.0, 0.0, g)))
    b = squeezing_entropy(squeezing_eigenstate(m, n, solve_squeezing(scale, 0.3 * scale, g * scale)))
    assert a == pytest.approx(b, abs=1e-10)


@settings(max_examples=20, deadline=None)
@given(quanta, quanta, st.floats(0.05, 0.9))
def test_entropy_against_sector(m, n, g):
    sol = solve_squeezing(2.0, 0.25, 2.0 * g)
    state = squeezing_eigenstate(m, n, sol, cutoff=120)
    excess = "a" if m >= n else "b"
    sector = build_squeezing_sector(abs(m - n), 120, 2.25, 1.75, 2.0 * g, excess)
    w, v = diagonalize(sector)[min(m, n)]
    assert w == pytest.approx(sol.vacuum_shift + m * sol.omega_alpha + n * sol.omega_beta, abs=1e-8)
    assert squeezing_entropy(state) == pytest.approx(entropy_from_vector(sector.basis, v), abs=1e-8)
