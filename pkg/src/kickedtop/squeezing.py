"""Spin-squeezing parameters, the mean-spin frame, and pairwise correlations.

Everything here is a pure function of a Moments value plus the particle
count N.  The central object is the real symmetric 3x3 matrix

    Gamma_ab = N <J_a J_b>_sym - (N-1) <J_a><J_b>

whose minimal eigenvalue yields xi_T^2, whose restriction to the plane
perpendicular to the mean spin yields xi_KU^2, and whose projection along
the mean spin yields xi_n^2.  For states confined to the symmetric subspace
(<J.J> = N/2 (N/2+1)) the pairwise correlation matrix of any two spins is
an affine rescaling of Gamma, which links squeezing to negative pairwise
correlations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin import Moments

MEAN_SPIN_TOL = 1e-12
DEGENERACY_TOL = 1e-10
SYMMETRIC_SUBSPACE_TOL = 1e-8


@dataclass(frozen=True)
class GammaMatrix:
    """N <J_a J_b>_sym - (N-1) <J_a><J_b> for an N-particle ensemble."""

    entries: np.ndarray
    n_particles: int

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (3, 3) or np.max(np.abs(entries - entries.T)) > 1e-12:
            raise ValueError("Gamma must be a symmetric 3x3 matrix")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class MeanSpinFrame:
    """Orthonormal frame (n, n1, n2) adapted to the mean spin direction n."""

    theta0: float
    phi0: float
    n: np.ndarray
    n1: np.ndarray
    n2: np.ndarray


@dataclass(frozen=True)
class SqueezingReport:
    """All squeezing witnesses of one state.

    ``xi_ku2``, ``xi_n2`` and ``frame`` are None when the mean spin vanishes
    and the perpendicular plane is undefined; ``xi_t2`` and ``c_min`` need no
    frame and are always present.  ``degenerate_direction`` marks a minimal
    Gamma eigenvalue of multiplicity > 1, where ``min_direction`` is only one
    representative of the squeezed subspace.
    """

    xi_t2: float
    xi_ku2: float | None
    xi_n2: float | None
    c_min: float
    min_direction: np.ndarray
    frame: MeanSpinFrame | None
    degenerate_direction: bool


def gamma_matrix(m: Moments, n: int) -> GammaMatrix:
    """Combine covariance and second-moment matrices into Gamma."""
    if n < 2:
        raise ValueError(f"Gamma requires at least 2 particles, got {n}")
    entries = n * m.second - (n - 1) * np.outer(m.first, m.first)
    return GammaMatrix((entries + entries.T) / 2, n)


def _fix_sign(v: np.ndarray) -> np.ndarray:
    """Orient an eigenvector so its largest-magnitude component is positive."""
    return -v if v[np.argmax(np.abs(v))] < 0 else v


def xi_t2(m: Moments, n: int) -> tuple[float, np.ndarray]:
    """Squeezing over all directions: min eigenvalue of Gamma over <J.J> - N/2.

    Returns (value, direction) where direction is the unit eigenvector of the
    minimal eigenvalue, sign-fixed for reproducibility.
    """
    denominator = m.jsq - n / 2
    if denominator <= 1e-12 * max(1.0, abs(m.jsq)):
        raise ValueError("<J.J> - N/2 is not positive; squeezing undefined")
    w, v = np.linalg.eigh(gamma_matrix(m, n).entries)
    return w[0] / denominator, _fix_sign(v[:, 0])


def mean_spin_frame(m: Moments) -> MeanSpinFrame:
    """Polar/azimuthal angles of the mean spin and two perpendicular axes.

    Raises if the mean spin vanishes.  When the mean spin is parallel to z
    the azimuth is set to 0 by convention.
    """
    length = float(np.linalg.norm(m.first))
    if length <= MEAN_SPIN_TOL:
        raise ValueError("mean spin vanishes; frame undefined")
    jx, jy, jz = m.first
    theta0 = math.acos(min(1.0, max(-1.0, jz / length)))
    if math.hypot(jx, jy) <= MEAN_SPIN_TOL * length:
        phi0 = 0.0
    else:
        c = min(1.0, max(-1.0, jx / (length * math.sin(theta0))))
        phi0 = math.acos(c) if jy > 0 else 2 * math.pi - math.acos(c)
    n1 = np.array(
        [-math.cos(theta0) * math.cos(phi0), -math.cos(theta0) * math.sin(phi0), math.sin(theta0)]
    )
    n2 = np.array([-math.sin(phi0), math.cos(phi0), 0.0])
    return MeanSpinFrame(theta0, phi0, m.first / length, n1, n2)


def xi_ku2(m: Moments, n: int) -> float:
    """Minimal variance perpendicular to the mean spin, scaled by 4/N.

    Equals the minimal eigenvalue of the 2x2 second-moment block in the
    (n1, n2) plane times 4/N: perpendicular components have zero mean, so
    variances reduce to second moments there.
    """
    if n < 2:
        raise ValueError(f"xi_KU^2 requires at least 2 particles, got {n}")
    frame = mean_spin_frame(m)
    a = frame.n1 @ m.second @ frame.n1
    b = frame.n2 @ m.second @ frame.n2
    c = frame.n1 @ m.second @ frame.n2
    lam_min = (a + b) / 2 - math.hypot((a - b) / 2, c)
    return 4 * lam_min / n


def xi_n2(m: Moments, n: int) -> float:
    """Squeezing along the instantaneous mean spin: (4/N^2)[N var(J_n) + <J_n>^2]."""
    if n < 2:
        raise ValueError(f"xi_n^2 requires at least 2 particles, got {n}")
    frame = mean_spin_frame(m)
    mean = frame.n @ m.first
    variance = frame.n @ m.second @ frame.n - mean**2
    return 4 * (n * variance + mean**2) / n**2


def _require_symmetric_subspace(m: Moments, n: int):
    expected = n / 2 * (n / 2 + 1)
    if abs(m.jsq - expected) > SYMMETRIC_SUBSPACE_TOL:
        raise ValueError(
            f"<J.J> = {m.jsq:.12g} but the symmetric subspace requires {expected:.12g}"
        )


def correlation_matrix(m: Moments, n: int) -> np.ndarray:
    """Two-spin correlation matrix <s_1a s_2b> - <s_1a><s_2b> from collective moments.

    Valid only in the symmetric subspace, where it is 4 Gamma / (N^2 (N-1))
    minus 1/(N-1) on the diagonal.
    """
    if n < 2:
        raise ValueError(f"pair correlations require at least 2 particles, got {n}")
    _require_symmetric_subspace(m, n)
    gamma = gamma_matrix(m, n).entries
    return 4 * gamma / (n**2 * (n - 1)) - np.eye(3) / (n - 1)


def pairwise_correlation(m: Moments, n: int, direction: np.ndarray) -> float:
    """Pair correlation of two spins projected along a unit direction."""
    direction = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(direction)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError("direction must be a unit vector")
    return float(direction @ correlation_matrix(m, n) @ direction)


def c_min(m: Moments, n: int) -> float:
    """Minimal pairwise correlation over all directions: (xi_T^2 - 1)/(N - 1).

    Negative exactly when the state is spin squeezed (xi_T^2 < 1).
    """
    _require_symmetric_subspace(m, n)
    value, _ = xi_t2(m, n)
    return (value - 1) / (n - 1)


def squeezing_report(m: Moments, n: int) -> SqueezingReport:
    """Evaluate every witness once, sharing the Gamma eigendecomposition."""
    _require_symmetric_subspace(m, n)
    denominator = m.jsq - n / 2
    w, v = np.linalg.eigh(gamma_matrix(m, n).entries)
    value_t = w[0] / denominator
    direction = _fix_sign(v[:, 0])
    degenerate = bool(w[1] - w[0] < DEGENERACY_TOL)
    if np.linalg.norm(m.first) > MEAN_SPIN_TOL:
        frame = mean_spin_frame(m)
        value_ku = xi_ku2(m, n)
        value_n = xi_n2(m, n)
    else:
        frame, value_ku, value_n = None, None, None
    return SqueezingReport(
        xi_t2=value_t,
        xi_ku2=value_ku,
        xi_n2=value_n,
        c_min=(value_t - 1) / (n - 1),
        min_direction=direction,
        frame=frame,
        degenerate_direction=degenerate,
    )
