"""Kicked-top Floquet evolution and its classical stroboscopic limit.

One kick applies U = exp(-i (kappa/2j) J_z^2) exp(-i p J_y) to the state:
a rotation by p about y followed by a nonlinear twist about z.  The classical
limit map below is derived for p = pi/2; the quantum side accepts general p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin import Operator, SpinQuantum, StateVector, hermitian_exponential, jy_operator

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class KickedTopParams:
    """Twist strength kappa, kick rotation angle p, and kick period tau (fixed 1)."""

    spin: SpinQuantum
    kappa: float
    p: float = math.pi / 2
    tau: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.kappa):
            raise ValueError(f"kappa must be finite, got {self.kappa!r}")
        if self.tau != 1.0:
            raise ValueError("kick period tau is fixed at 1")


def floquet_operator(params: KickedTopParams) -> Operator:
    """One-kick unitary: twist exp(-i kappa/2j J_z^2) after rotation exp(-i p J_y)."""
    spin = params.spin
    rotation = hermitian_exponential(jy_operator(spin), -params.p)
    twist_phases = np.exp(-1j * (params.kappa / (2 * spin.j)) * spin.m_values() ** 2)
    return Operator(spin, twist_phases[:, None] * rotation.matrix)


def evolve(state: StateVector, params: KickedTopParams, kicks: int) -> list[StateVector]:
    """Stroboscopic trajectory [psi_0, U psi_0, ..., U^kicks psi_0]."""
    if kicks < 0:
        raise ValueError(f"kicks must be >= 0, got {kicks}")
    if state.spin != params.spin:
        raise ValueError("state and parameters carry different spins")
    u = floquet_operator(params).matrix
    trajectory = [state]
    psi = state.amplitudes
    for _ in range(kicks):
        psi = u @ psi
        trajectory.append(StateVector(state.spin, psi))
    return trajectory


def classical_point(theta: float, phi: float) -> np.ndarray:
    """Unit Bloch vector (X, Y, Z) for polar angle theta and azimuth phi."""
    return np.array(
        [
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]
    )


def point_angles(point: np.ndarray) -> tuple[float, float]:
    """(theta, phi) of a unit Bloch vector, with phi in (-pi, pi]."""
    x, y, z = point
    return math.acos(min(1.0, max(-1.0, z))), math.atan2(y, x)


def classical_step(point: np.ndarray, kappa: float) -> np.ndarray:
    """One iteration of the classical kicked-top map (p = pi/2).

    Accepts a single (X, Y, Z) point or an array of shape (..., 3).
    """
    point = np.asarray(point, dtype=float)
    x, y, z = point[..., 0], point[..., 1], point[..., 2]
    c, s = np.cos(kappa * x), np.sin(kappa * x)
    return np.stack([z * c + y * s, -z * s + y * c, -x], axis=-1)


def classical_trajectory(point: np.ndarray, kappa: float, kicks: int) -> np.ndarray:
    """Iterate the classical map; returns an array of shape (kicks+1, 3)."""
    point = np.asarray(point, dtype=float)
    if kicks < 0:
        raise ValueError(f"kicks must be >= 0, got {kicks}")
    if abs(np.linalg.norm(point) - 1.0) > UNIT_TOL:
        raise ValueError("initial point must lie on the unit sphere")
    out = np.empty((kicks + 1, 3))
    out[0] = point
    for k in range(kicks):
        out[k + 1] = classical_step(out[k], kappa)
    return out


def phase_space_trajectories(
    kappa: float, n_states: int, kicks: int, seed: int
) -> np.ndarray:
    """Classical trajectories of seeded random initial states, shape (n_states, kicks+1, 3).

    Initial points are uniform on the sphere: cos(theta) uniform in [-1, 1],
    phi uniform in (-pi, pi).  All states are stepped together, vectorized.
    """
    if n_states < 1 or kicks < 1:
        raise ValueError("n_states and kicks must be >= 1")
    rng = np.random.default_rng(seed)
    cos_theta = rng.uniform(-1.0, 1.0, n_states)
    phi = rng.uniform(-math.pi, math.pi, n_states)
    sin_theta = np.sqrt(1.0 - cos_theta**2)
    points = np.empty((n_states, kicks + 1, 3))
    points[:, 0, 0] = sin_theta * np.cos(phi)
    points[:, 0, 1] = sin_theta * np.sin(phi)
    points[:, 0, 2] = cos_theta
    for k in range(kicks):
        points[:, k + 1] = classical_step(points[:, k], kappa)
    return points


def phase_space_map(kappa: float, n_states: int, kicks: int, seed: int) -> np.ndarray:
    """Stroboscopic point cloud in (theta, phi), shape (n_states*(kicks+1), 2).

    Rows are ordered state-major, kick-minor, so the output is a deterministic
    function of the seed.
    """
    points = phase_space_trajectories(kappa, n_states, kicks, seed)
    flat = points.reshape(-1, 3)
    theta = np.arccos(np.clip(flat[:, 2], -1.0, 1.0))
    phi = np.arctan2(flat[:, 1], flat[:, 0])
    return np.column_stack([theta, phi])
