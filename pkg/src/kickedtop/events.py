"""Per-kick witness records and sudden death/birth detection.

A witness series is one record per kick (kick 0 is the initial state).  The
event detector operates on any nonnegative signal sampled per kick, here the
concurrence and the squeezing signal zeta^2: a death is a positive sample
followed by a zero one, a birth the reverse.  The very first rise out of the
leading all-zero block is production of signal from the uncorrelated initial
state, so it is classified separately from later rebirths.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .entanglement import concurrence, rho12_from_moments
from .spin import StateVector, moments
from .squeezing import MeanSpinFrame, squeezing_report

DEFAULT_EPS = 1e-9


def zeta2(xi_t2_value: float) -> float:
    """Spin-squeezing signal max(0, 1 - xi_T^2); zero when there is no squeezing."""
    return max(0.0, 1.0 - xi_t2_value)


@dataclass(frozen=True)
class EventLog:
    """Death/birth kick indices of one signal, plus the zero-signal kick count."""

    deaths: tuple[int, ...]
    births: tuple[int, ...]
    initial_birth: int | None
    dead_total: int

    def as_dict(self) -> dict:
        return {
            "initial_birth": self.initial_birth,
            "deaths": list(self.deaths),
            "births": list(self.births),
            "dead_total": self.dead_total,
        }


def detect_transitions(signal: Sequence[float], eps: float = DEFAULT_EPS) -> EventLog:
    """Locate zero crossings of a sampled nonnegative signal.

    A sample is dead when <= eps.  Death at k: signal alive at k-1, dead at k;
    birth at k: the reverse.  The first birth out of the leading dead block
    (or kick 0 itself, if already alive) is reported as ``initial_birth`` and
    excluded from the births list.  ``dead_total`` counts dead samples from
    ``initial_birth`` onward and is 0 for an all-dead series.
    """
    if len(signal) == 0:
        raise ValueError("empty signal")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    alive = [s > eps for s in signal]
    deaths, births = [], []
    initial_birth = 0 if alive[0] else None
    for k in range(1, len(alive)):
        if alive[k - 1] and not alive[k]:
            deaths.append(k)
        elif not alive[k - 1] and alive[k]:
            if initial_birth is None and not deaths:
                initial_birth = k
            else:
                births.append(k)
    if initial_birth is None:
        return EventLog((), (), None, 0)
    dead_total = sum(1 for k in range(initial_birth, len(alive)) if not alive[k])
    return EventLog(tuple(deaths), tuple(births), initial_birth, dead_total)


@dataclass(frozen=True)
class WitnessRecord:
    """Every per-kick quantity tracked along a trajectory.

    ``xi_ku2``, ``xi_n2``, ``theta0``, ``phi0`` and ``frame`` are None when
    the mean spin vanishes at that kick.
    """

    kick: int
    first: np.ndarray
    xi_t2: float
    xi_ku2: float | None
    xi_n2: float | None
    xi_c2: float
    concurrence: float
    c1: float
    c_min: float
    zeta2: float
    theta0: float | None
    phi0: float | None
    min_direction: np.ndarray
    frame: MeanSpinFrame | None
    degenerate_direction: bool


def witness_series(trajectory: Sequence[StateVector]) -> list[WitnessRecord]:
    """Evaluate all witnesses on each state of a stroboscopic trajectory."""
    if len(trajectory) == 0:
        raise ValueError("empty trajectory")
    n = trajectory[0].spin.n
    records = []
    for kick, state in enumerate(trajectory):
        m = moments(state)
        squeezing = squeezing_report(m, n)
        pair = concurrence(rho12_from_moments(m, n), n)
        frame = squeezing.frame
        records.append(
            WitnessRecord(
                kick=kick,
                first=m.first,
                xi_t2=squeezing.xi_t2,
                xi_ku2=squeezing.xi_ku2,
                xi_n2=squeezing.xi_n2,
                xi_c2=pair.xi_c2,
                concurrence=pair.concurrence,
                c1=pair.c1,
                c_min=squeezing.c_min,
                zeta2=zeta2(squeezing.xi_t2),
                theta0=frame.theta0 if frame else None,
                phi0=frame.phi0 if frame else None,
                min_direction=squeezing.min_direction,
                frame=frame,
                degenerate_direction=squeezing.degenerate_direction,
            )
        )
    return records
