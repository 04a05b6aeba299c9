"""Two-qubit reduced states, Wootters concurrence, and full-space oracles.

For exchange-symmetric states the reduced density matrix of any spin pair is
determined by the collective first and second moments alone; that
reconstruction is what lets concurrence be tracked at N = 50 without ever
forming a 2^N-dimensional state.  The 2^N-space helpers at the bottom exist
to validate the reconstruction by brute force at small N and are used
throughout the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin import Moments, StateVector
from .squeezing import _require_symmetric_subspace

ORACLE_MAX_N = 12

DENSITY_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-9

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

_SWAP = np.eye(4)[[0, 2, 1, 3]]
_SY_SY = np.kron(SIGMA_Y, SIGMA_Y).real

_SQ2 = math.sqrt(0.5)
# columns: |uu>, (|ud>+|du>)/sqrt(2), |dd>, (|ud>-|du>)/sqrt(2)
_COUPLED = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.0, _SQ2, 0.0, _SQ2],
    [0.0, _SQ2, 0.0, -_SQ2],
    [0.0, 0.0, 1.0, 0.0],
])
# sy x sy restricted to the triplet block of the coupled basis (singlet block is -1)
_FLIP_TRIPLET = np.array([[0.0, 0.0, -1.0], [0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]])


@dataclass(frozen=True)
class TwoQubitDensity:
    """Reduced state of one spin pair in the basis |uu>, |ud>, |du>, |dd>.

    Validated as hermitian, unit trace, positive semidefinite up to round-off,
    and swap-symmetric (the source states have exchange symmetry).  Negative
    eigenvalues beyond round-off scale are an error, not something to clip:
    they signal inconsistent input moments.
    """

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > DENSITY_TOL:
            raise ValueError("pair density matrix is not hermitian")
        if abs(np.trace(mat).real - 1.0) > DENSITY_TOL:
            raise ValueError("pair density matrix does not have unit trace")
        if np.max(np.abs(_SWAP @ mat @ _SWAP - mat)) > DENSITY_TOL:
            raise ValueError("pair density matrix is not swap-symmetric")
        smallest = np.linalg.eigvalsh(mat)[0]
        if smallest < EIGENVALUE_FLOOR:
            raise ValueError(f"pair density matrix has eigenvalue {smallest:.3e} < {EIGENVALUE_FLOOR}")
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True)
class ConcurrenceReport:
    """Concurrence max(0, c1), the unclipped c1, xi_C^2 = 1 - (N-1) c1, and the lambdas."""

    concurrence: float
    c1: float
    xi_c2: float
    lambdas: np.ndarray


def rho12_from_moments(m: Moments, n: int) -> TwoQubitDensity:
    """Reconstruct the pair state of an exchange-symmetric ensemble from moments.

    In the Pauli expansion rho12 = 1/4 [I + sum_a s_a (sigma_a x I + I x sigma_a)
    + sum_ab T_ab sigma_a x sigma_b], the single-spin vector is s_a = 2<J_a>/N
    and the two-spin tensor T follows from the symmetrized second moments:
    diagonal entries (4 <J_a^2> - N)/(N(N-1)), off-diagonal entries
    4 <J_a J_b>_sym / (N(N-1)).
    """
    if n < 2:
        raise ValueError(f"pair reduction requires at least 2 particles, got {n}")
    _require_symmetric_subspace(m, n)
    s = 2 * m.first / n
    t = 4 * m.second / (n * (n - 1))
    np.fill_diagonal(t, (4 * np.diag(m.second) - n) / (n * (n - 1)))
    eye = np.eye(2)
    rho = np.eye(4, dtype=complex)
    for a in range(3):
        rho += s[a] * (np.kron(PAULI[a], eye) + np.kron(eye, PAULI[a]))
        for b in range(3):
            rho += t[a, b] * np.kron(PAULI[a], PAULI[b])
    return TwoQubitDensity(rho / 4)


def concurrence(rho: TwoQubitDensity, n: int) -> ConcurrenceReport:
    """Wootters concurrence of a pair state, with the unclipped variant.

    The lambdas are the descending square roots of the eigenvalues of
    rho (sy x sy) rho* (sy x sy).  Taking those roots from eigenvalues of the
    4x4 product amplifies round-off near zero (sqrt of 0 +- 1e-16 is 1e-8),
    which matters here because symmetric pair states always carry a singular
    direction.  Instead: swap symmetry makes rho block diagonal in the
    coupled basis (triplet + singlet), the spin flip preserves that split,
    and on each block the lambdas are singular values of the complex
    symmetric matrix X^T (sy x sy) X with rho = X X^dagger, obtained without
    squaring.  Triplet eigenvalues of rho below round-off scale are dropped
    from the factor X rather than square-rooted.
    """
    mat = rho.matrix
    mat = (mat + _SWAP @ mat @ _SWAP) / 2  # exact block split at validated cost
    coupled = _COUPLED.T @ mat @ _COUPLED
    w, v = np.linalg.eigh(coupled[:3, :3])
    w[w < 16 * np.finfo(float).eps * max(1.0, w[-1])] = 0.0
    x = v * np.sqrt(w)
    m_factor = x.T @ _FLIP_TRIPLET @ x
    triplet = np.linalg.svd(m_factor, compute_uv=False)
    singlet = max(0.0, coupled[3, 3].real)
    lambdas = np.sort(np.append(triplet, singlet))[::-1]
    c1 = float(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
    return ConcurrenceReport(
        concurrence=max(0.0, c1),
        c1=c1,
        xi_c2=1 - (n - 1) * c1,
        lambdas=lambdas,
    )


def _popcounts(n: int) -> np.ndarray:
    return np.array([bin(b).count("1") for b in range(2**n)])


def symmetric_embed(state: StateVector) -> np.ndarray:
    """Expand a Dicke-basis state into the full 2^N product space.

    |j, m> becomes the equal-amplitude superposition of all product states
    with j+m spins up; bit k of the basis index is spin k, with 0 = up.
    Limited to N <= 12: this is oracle machinery, not a production path.
    """
    n = state.spin.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"full-space embedding limited to N <= {ORACLE_MAX_N}, got {n}")
    down = _popcounts(n)  # index in the Dicke basis: m = j - (number of down spins)
    weights = np.sqrt(np.array([math.comb(n, int(k)) for k in range(n + 1)], dtype=float))
    return state.amplitudes[down] / weights[down]


def partial_trace_pair(full: np.ndarray, n: int | None = None) -> TwoQubitDensity:
    """Reduced density matrix of the first two spins of a full-space pure state."""
    full = np.asarray(full, dtype=complex)
    size = full.shape[0]
    inferred = size.bit_length() - 1
    if full.ndim != 1 or 2**inferred != size:
        raise ValueError("full-space state must be a vector of length 2^N")
    if n is None:
        n = inferred
    if n != inferred:
        raise ValueError(f"state of length {size} is inconsistent with N = {n}")
    if n < 2:
        raise ValueError(f"pair reduction requires at least 2 spins, got {n}")
    if n > ORACLE_MAX_N:
        raise ValueError(f"full-space reduction limited to N <= {ORACLE_MAX_N}, got {n}")
    block = full.reshape(4, -1)
    return TwoQubitDensity(block @ block.conj().T)


def _site_operator(op: np.ndarray, site: int, n: int) -> np.ndarray:
    return np.kron(np.kron(np.eye(2**site), op), np.eye(2 ** (n - site - 1)))


def collective_operators_full(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Collective (J_x, J_y, J_z) = sum_k sigma_k/2 on the full 2^N space."""
    if n > ORACLE_MAX_N:
        raise ValueError(f"full-space operators limited to N <= {ORACLE_MAX_N}, got {n}")
    ops = []
    for pauli in PAULI:
        total = np.zeros((2**n, 2**n), dtype=complex)
        for site in range(n):
            total += _site_operator(pauli, site, n)
        ops.append(total / 2)
    return tuple(ops)


def pair_correlation_brute(full: np.ndarray, n: int) -> np.ndarray:
    """Direct <s_1a s_2b> - <s_1a><s_2b> on a full-space pure state."""
    full = np.asarray(full, dtype=complex)
    singles = [_site_operator(p, 0, n) for p in PAULI]
    seconds = [_site_operator(p, 1, n) for p in PAULI]
    out = np.empty((3, 3))
    means = [np.vdot(full, op @ full).real for op in singles]
    for a in range(3):
        for b in range(3):
            corr = np.vdot(full, singles[a] @ (seconds[b] @ full)).real
            out[a, b] = corr - means[a] * means[b]
    return out
