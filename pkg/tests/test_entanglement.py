import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from kickedtop import (
    Moments,
    SpinQuantum,
    StateVector,
    TwoQubitDensity,
    coherent_spin_state,
    concurrence,
    moments,
    pair_correlation_brute,
    partial_trace_pair,
    rho12_from_moments,
    symmetric_embed,
)
from kickedtop.squeezing import correlation_matrix


def dicke(n, index):
    spin = SpinQuantum(n)
    amp = np.zeros(spin.dim, dtype=complex)
    amp[index] = 1.0
    return StateVector(spin, amp)


def test_density_validation():
    with pytest.raises(ValueError):
        TwoQubitDensity(np.eye(3))
    skew = np.eye(4, dtype=complex) / 4
    skew[0, 1] = 0.3
    with pytest.raises(ValueError):
        TwoQubitDensity(skew)
    with pytest.raises(ValueError):
        TwoQubitDensity(np.eye(4) / 2)  # trace 2
    asym = np.zeros((4, 4))
    asym[1, 1] = 1.0  # |ud><ud| is not swap-symmetric
    with pytest.raises(ValueError):
        TwoQubitDensity(asym)
    dented = np.diag([0.5, 0.3, 0.3, -0.1])
    with pytest.raises(ValueError):
        TwoQubitDensity(dented)


def test_bell_state_concurrence_is_one():
    bell = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    report = concurrence(TwoQubitDensity(np.outer(bell, bell.conj())), 2)
    assert report.concurrence == pytest.approx(1.0, abs=1e-14)
    assert report.xi_c2 == pytest.approx(0.0, abs=1e-13)


def test_product_state_concurrence_is_zero():
    report = concurrence(TwoQubitDensity(np.diag([1.0, 0, 0, 0])), 2)
    assert report.concurrence == 0.0
    assert report.c1 == pytest.approx(0.0, abs=1e-14)


def test_werner_family_closed_form():
    # singlet weight p: concurrence max(0, (3p-1)/2); exercises the
    # antisymmetric block, which symmetric dynamics never populates
    singlet = np.array([0, 1, -1, 0], dtype=complex) / math.sqrt(2)
    projector = np.outer(singlet, singlet.conj())
    for p in (0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0):
        mixed = p * projector + (1 - p) * np.eye(4) / 4
        got = concurrence(TwoQubitDensity(mixed), 2).concurrence
        assert got == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-13)


def test_one_excitation_states_give_two_over_n():
    for n in (2, 3, 4, 8, 12):
        rho = rho12_from_moments(moments(dicke(n, 1)), n)
        report = concurrence(rho, n)
        assert report.concurrence == pytest.approx(2 / n, abs=1e-12)
        assert report.lambdas.shape == (4,)
        assert np.all(np.diff(report.lambdas) <= 1e-15)


def test_reconstruction_matches_partial_trace_one_excitation():
    state = dicke(3, 1)
    reconstructed = rho12_from_moments(moments(state), 3)
    traced = partial_trace_pair(symmetric_embed(state), 3)
    assert np.max(np.abs(reconstructed.matrix - traced.matrix)) < 1e-10


def test_reconstruction_matches_partial_trace_two_excitations():
    state = dicke(4, 2)
    reconstructed = rho12_from_moments(moments(state), 4)
    traced = partial_trace_pair(symmetric_embed(state), 4)
    assert np.max(np.abs(reconstructed.matrix - traced.matrix)) < 1e-10


def test_reconstruction_requires_symmetric_subspace():
    fake = Moments(np.array([0.0, 0.0, 1.0]), np.eye(3))
    with pytest.raises(ValueError):
        rho12_from_moments(fake, 4)


def test_coherent_state_pair_is_unentangled():
    for n in (4, 20, 50):
        m = moments(coherent_spin_state(SpinQuantum(n), 1.1, -0.7))
        assert concurrence(rho12_from_moments(m, n), n).concurrence == pytest.approx(
            0.0, abs=1e-12
        )


def test_symmetric_embed_structure():
    # N=3 one-excitation state: equal weight on the three single-down
    # product states 100, 010, 001 (bit k set = spin k down)
    full = symmetric_embed(dicke(3, 1))
    assert np.linalg.norm(full) == pytest.approx(1.0, abs=1e-14)
    expected = np.zeros(8)
    for bit in (0b001, 0b010, 0b100):
        expected[bit] = 1 / math.sqrt(3)
    assert_allclose(full, expected, atol=1e-14)


def test_symmetric_embed_scale_guard():
    with pytest.raises(ValueError):
        symmetric_embed(dicke(13, 0))


def test_partial_trace_of_polar_state():
    full = symmetric_embed(dicke(4, 0))  # all spins up
    rho = partial_trace_pair(full, 4)
    want = np.zeros((4, 4))
    want[0, 0] = 1.0
    assert_allclose(rho.matrix, want, atol=1e-14)


def test_partial_trace_input_validation():
    with pytest.raises(ValueError):
        partial_trace_pair(np.ones(6) / math.sqrt(6))
    with pytest.raises(ValueError):
        partial_trace_pair(np.array([1.0, 0.0]), 1)


def test_brute_force_correlations_match_moment_formula():
    rng = np.random.default_rng(23)
    for n in (3, 4):
        spin = SpinQuantum(n)
        for _ in range(10):
            amp = rng.standard_normal(spin.dim) + 1j * rng.standard_normal(spin.dim)
            state = StateVector(spin, amp / np.linalg.norm(amp))
            m = moments(state)
            brute = pair_correlation_brute(symmetric_embed(state), n)
            assert_allclose(correlation_matrix(m, n), brute, atol=1e-12)
