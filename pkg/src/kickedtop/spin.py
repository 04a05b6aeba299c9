"""Collective spin operators, coherent states, and moments in the Dicke basis.

An ensemble of N spin-1/2 particles restricted to the permutation-symmetric
subspace is described by a single collective spin j = N/2 living in the
(2j+1)-dimensional Dicke basis |j,m>.  Basis ordering convention: index 0 is
m = +j and m decreases with the index, so J_z is diagonal with entries
j, j-1, ..., -j and |j,j> is the first basis vector.  hbar = 1 throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

NORM_TOL = 1e-12
HERM_TOL = 1e-12

AXES = ("x", "y", "z")


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SpinQuantum:
    """Spin magnitude j = n/2 of an ensemble of n spin-1/2 particles."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ValueError(f"particle count must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ValueError(f"particle count must be >= 1, got {self.n}")

    @classmethod
    def from_j(cls, j: float) -> "SpinQuantum":
        n = round(2 * j)
        if n < 1 or abs(2 * j - n) > 1e-12:
            raise ValueError(f"j must be a positive half-integer, got {j!r}")
        return cls(int(n))

    @property
    def j(self) -> float:
        return self.n / 2

    @property
    def dim(self) -> int:
        """Hilbert-space dimension 2j+1 = n+1."""
        return self.n + 1

    def m_values(self) -> np.ndarray:
        """Magnetic quantum numbers in basis order: j, j-1, ..., -j."""
        return self.j - np.arange(self.dim)


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over the Dicke basis of a given spin."""

    spin: SpinQuantum
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.shape != (self.spin.dim,):
            raise ValueError(
                f"expected {self.spin.dim} amplitudes, got shape {amp.shape}"
            )
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
        object.__setattr__(self, "amplitudes", _readonly(amp))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class Operator:
    """Dense complex matrix acting on the Dicke basis of a given spin.

    The ``hermitian`` tag is a checked promise: construction fails if the
    matrix is not self-adjoint within ``HERM_TOL``.
    """

    spin: SpinQuantum
    matrix: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        d = self.spin.dim
        if mat.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix, got shape {mat.shape}")
        if self.hermitian and np.max(np.abs(mat - mat.conj().T)) > HERM_TOL:
            raise ValueError("matrix tagged hermitian is not self-adjoint")
        object.__setattr__(self, "matrix", _readonly(mat))

    def apply(self, state: StateVector) -> np.ndarray:
        """Raw matrix-vector product (no normalization check on the result)."""
        return self.matrix @ state.amplitudes


@dataclass(frozen=True)
class Moments:
    """First moments <J_a> and symmetrized second moments of a collective spin.

    ``second[a, b] = <J_a J_b + J_b J_a> / 2`` so the trace equals <J.J>.
    """

    first: np.ndarray
    second: np.ndarray

    def __post_init__(self):
        first = np.asarray(self.first, dtype=float)
        second = np.asarray(self.second, dtype=float)
        if first.shape != (3,) or second.shape != (3, 3):
            raise ValueError("moments require a 3-vector and a 3x3 matrix")
        if np.max(np.abs(second - second.T)) > HERM_TOL:
            raise ValueError("second-moment matrix is not symmetric")
        object.__setattr__(self, "first", _readonly(first))
        object.__setattr__(self, "second", _readonly(second))

    @property
    def jsq(self) -> float:
        """<J.J>, the trace of the symmetrized second-moment matrix."""
        return float(np.trace(self.second))


@lru_cache(maxsize=None)
def _ladder_plus(n: int) -> np.ndarray:
    spin = SpinQuantum(n)
    j = spin.j
    m = spin.m_values()
    jp = np.zeros((spin.dim, spin.dim), dtype=complex)
    # <j, m+1 | J_+ | j, m> couples column i (m = j-i) to row i-1
    for i in range(1, spin.dim):
        jp[i - 1, i] = math.sqrt(j * (j + 1) - m[i] * (m[i] + 1))
    return _readonly(jp)


@lru_cache(maxsize=None)
def _jxyz(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    jp = _ladder_plus(n)
    jm = jp.conj().T
    jx = _readonly((jp + jm) / 2)
    jy = _readonly((jp - jm) / 2j)
    jz = _readonly(np.diag(SpinQuantum(n).m_values()).astype(complex))
    return jx, jy, jz


def jz_operator(spin: SpinQuantum) -> Operator:
    """J_z, diagonal with entries j, j-1, ..., -j."""
    return Operator(spin, _jxyz(spin.n)[2], hermitian=True)


def jx_operator(spin: SpinQuantum) -> Operator:
    """J_x = (J_+ + J_-)/2."""
    return Operator(spin, _jxyz(spin.n)[0], hermitian=True)


def jy_operator(spin: SpinQuantum) -> Operator:
    """J_y = (J_+ - J_-)/(2i)."""
    return Operator(spin, _jxyz(spin.n)[1], hermitian=True)


def ladder_operators(spin: SpinQuantum) -> tuple[Operator, Operator]:
    """Raising and lowering operators (J_+, J_-) with J_- = J_+^dagger."""
    jp = _ladder_plus(spin.n)
    return Operator(spin, jp), Operator(spin, jp.conj().T)


def hermitian_exponential(op: Operator, scale: float) -> Operator:
    """exp(i * scale * H) for hermitian H, via spectral decomposition.

    The eigenbasis route keeps the result unitary to eigensolver accuracy,
    which a truncated series would not.
    """
    if not op.hermitian:
        raise ValueError("hermitian_exponential requires a hermitian operator")
    w, v = np.linalg.eigh(op.matrix)
    u = (v * np.exp(1j * scale * w)) @ v.conj().T
    return Operator(op.spin, u)


def rotation_operator(spin: SpinQuantum, theta: float, phi: float) -> Operator:
    """Rotation exp{i theta [J_x sin(phi) - J_y cos(phi)]}."""
    jx, jy, _ = _jxyz(spin.n)
    generator = Operator(spin, math.sin(phi) * jx - math.cos(phi) * jy, hermitian=True)
    return hermitian_exponential(generator, theta)


def coherent_spin_state(spin: SpinQuantum, theta: float, phi: float) -> StateVector:
    """Coherent spin state: the maximal J_z state rotated to point along (theta, phi)."""
    # R(theta, phi) |j,j> is the first column of the rotation matrix
    return StateVector(spin, rotation_operator(spin, theta, phi).matrix[:, 0])


def expectation(state: StateVector, op: Operator) -> float | complex:
    """<state| op |state>; real for hermitian operators."""
    val = np.vdot(state.amplitudes, op.matrix @ state.amplitudes)
    return float(val.real) if op.hermitian else complex(val)


def moments(state: StateVector) -> Moments:
    """First and symmetrized second moments of (J_x, J_y, J_z).

    With v_a = J_a |psi>, the Gram matrix Re(v_a^dag v_b) is exactly the
    symmetrized second moment, so three matrix-vector products suffice.
    """
    v = np.column_stack([j @ state.amplitudes for j in _jxyz(state.spin.n)])
    first = np.real(state.amplitudes.conj() @ v)
    second = np.real(v.conj().T @ v)
    second = (second + second.T) / 2
    return Moments(first, second)
