import math

import numpy as np
import pytest

from kickedtop import (
    KickedTopParams,
    SpinQuantum,
    StateVector,
    coherent_spin_state,
    evolve,
    witness_series,
)

# N=50, kappa=3, p=pi/2 starting points used throughout: one inside a small
# stability island, one on a large regular orbit, one deep in the chaotic sea.
REFERENCE_STARTS = {
    "periodic": (2.25, 0.63),
    "quasiperiodic": (2.25, -2.35),
    "chaotic": (2.25, -1.0),
}
REFERENCE_N = 50
REFERENCE_KICKS = 200


def one_axis_twisted(n, chi_t):
    """x-polarized coherent state twisted about z for a time chi_t.

    The one benchmark with closed-form squeezing: exp(-i chi_t Jz^2) applied
    to the (pi/2, 0) coherent state.
    """
    spin = SpinQuantum(n)
    css = coherent_spin_state(spin, math.pi / 2, 0.0)
    phases = np.exp(-1j * chi_t * spin.m_values() ** 2)
    return StateVector(spin, phases * css.amplitudes)


def ku_analytic(n, chi_t):
    """Closed-form Kitagawa-Ueda parameter of the one-axis-twisted state."""
    a = 1 - math.cos(2 * chi_t) ** (n - 2)
    b = 4 * math.sin(chi_t) * math.cos(chi_t) ** (n - 2)
    return 1 + (n - 1) / 4 * a - (n - 1) / 4 * math.hypot(a, b)


@pytest.fixture(scope="session")
def reference_runs():
    """(states, witness records) for the three reference trajectories."""
    spin = SpinQuantum(REFERENCE_N)
    params = KickedTopParams(spin, 3.0, math.pi / 2)
    runs = {}
    for name, (theta, phi) in REFERENCE_STARTS.items():
        states = evolve(coherent_spin_state(spin, theta, phi), params, REFERENCE_KICKS)
        runs[name] = (states, witness_series(states))
    return runs
