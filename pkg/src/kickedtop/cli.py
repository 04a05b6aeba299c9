"""Command-line harness: trajectory runs, phase-space maps, sweeps, oracle checks.

Every command is a deterministic function of its configuration and seed and
emits machine-readable output: CSV with a single header row for series and
point clouds (numbers at 17 significant digits, so values round-trip), JSON
for event summaries and oracle reports.  Exit status: 0 success, 1 oracle or
invariant failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .entanglement import (
    collective_operators_full,
    concurrence,
    pair_correlation_brute,
    partial_trace_pair,
    rho12_from_moments,
    symmetric_embed,
)
from .events import DEFAULT_EPS, EventLog, detect_transitions, witness_series
from .spin import SpinQuantum, StateVector, coherent_spin_state, moments
from .squeezing import c_min, correlation_matrix
from .top import KickedTopParams, evolve, phase_space_trajectories

DEFAULTS = {
    "n": 50,
    "kappa": 3.0,
    "p": math.pi / 2,
    "theta": 2.25,
    "phi": 0.63,
    "kicks": 200,
    "eps": DEFAULT_EPS,
    "seed": 0,
    "states": 200,
    "threads": 1,
    "format": "csv",
    "out": None,
    "theta_grid": None,
    "phi_grid": None,
}

ORACLE_TOLERANCE = 1e-9

SERIES_COLUMNS = [
    "kick", "jx", "jy", "jz", "xi_T2", "xi_KU2", "xi_n2", "xi_C2",
    "concurrence", "c1", "c_min", "zeta2", "theta0", "phi0",
    "dir_x", "dir_y", "dir_z", "frame_defined",
]


def _fmt(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def parse_grid(raw) -> list[float]:
    """Grid values from 'a,b,c' or 'start:stop:count', or a ready-made list."""
    if isinstance(raw, (list, tuple)):
        return [float(v) for v in raw]
    if ":" in raw:
        start, stop, count = raw.split(":")
        return [float(v) for v in np.linspace(float(start), float(stop), int(count))]
    return [float(tok) for tok in raw.split(",") if tok.strip()]


def run_series(n: int, kappa: float, p: float, theta: float, phi: float, kicks: int):
    """Witness records of the kicked top started from a coherent state."""
    spin = SpinQuantum(n)
    params = KickedTopParams(spin, kappa, p)
    initial = coherent_spin_state(spin, theta, phi)
    return witness_series(evolve(initial, params, kicks))


def series_events(records, eps: float) -> dict[str, EventLog]:
    """Transition logs of the concurrence and zeta^2 signals of one series."""
    return {
        "concurrence": detect_transitions([r.concurrence for r in records], eps),
        "zeta2": detect_transitions([r.zeta2 for r in records], eps),
    }


def _series_row(r) -> list:
    d = r.min_direction
    return [
        r.kick, r.first[0], r.first[1], r.first[2],
        r.xi_t2, r.xi_ku2, r.xi_n2, r.xi_c2,
        r.concurrence, r.c1, r.c_min, r.zeta2,
        r.theta0, r.phi0, d[0], d[1], d[2],
        0 if r.frame is None else 1,
    ]


def cmd_evolve(cfg: dict) -> int:
    records = run_series(cfg["n"], cfg["kappa"], cfg["p"], cfg["theta"], cfg["phi"], cfg["kicks"])
    events = series_events(records, cfg["eps"])
    if cfg["format"] == "json":
        series = [dict(zip(SERIES_COLUMNS, _series_row(r))) for r in records]
        doc = {
            "series": series,
            "events": {name: log.as_dict() for name, log in events.items()},
        }
        _write(json.dumps(doc) + "\n", cfg["out"])
    else:
        text = _csv(SERIES_COLUMNS, [_series_row(r) for r in records])
        for name, log in events.items():
            text += f"# events {name} {json.dumps(log.as_dict())}\n"
        _write(text, cfg["out"])
    return 0


def cmd_classical_map(cfg: dict) -> int:
    points = phase_space_trajectories(cfg["kappa"], cfg["states"], cfg["kicks"], cfg["seed"])
    n_states, steps, _ = points.shape
    rows = []
    for i in range(n_states):
        for k in range(steps):
            x, y, z = points[i, k]
            theta = math.acos(min(1.0, max(-1.0, z)))
            phi = math.atan2(y, x)
            rows.append([i, k, theta, phi, x, y, z])
    header = ["state_index", "kick", "theta", "phi", "X", "Y", "Z"]
    if cfg["format"] == "json":
        _write(json.dumps({"points": [dict(zip(header, row)) for row in rows]}) + "\n", cfg["out"])
    else:
        _write(_csv(header, rows), cfg["out"])
    return 0


def cmd_directions(cfg: dict) -> int:
    records = run_series(cfg["n"], cfg["kappa"], cfg["p"], cfg["theta"], cfg["phi"], cfg["kicks"])
    rows = []
    for r in records:
        if r.frame is None:
            rows.append([r.kick, None, None, None, 0])
        else:
            d = r.min_direction
            rows.append(
                [r.kick, d @ r.frame.n, d @ r.frame.n1, d @ r.frame.n2, 1]
            )
    header = ["kick", "proj_n", "proj_n1", "proj_n2", "frame_defined"]
    if cfg["format"] == "json":
        _write(json.dumps({"directions": [dict(zip(header, row)) for row in rows]}) + "\n", cfg["out"])
    else:
        _write(_csv(header, rows), cfg["out"])
    return 0


SWEEP_COLUMNS = [
    "index", "theta", "phi",
    "conc_initial_birth", "conc_deaths", "conc_births", "conc_dead_total", "conc_first_death",
    "zeta2_initial_birth", "zeta2_deaths", "zeta2_births", "zeta2_dead_total", "zeta2_first_death",
    "min_xi_T2", "status",
]


def _sweep_point(cfg: dict, index: int, theta: float, phi: float) -> dict:
    try:
        records = run_series(cfg["n"], cfg["kappa"], cfg["p"], theta, phi, cfg["kicks"])
        events = series_events(records, cfg["eps"])
        row = {"index": index, "theta": theta, "phi": phi, "status": "ok"}
        for name, log in events.items():
            key = "conc" if name == "concurrence" else name
            row[f"{key}_initial_birth"] = log.initial_birth
            row[f"{key}_deaths"] = len(log.deaths)
            row[f"{key}_births"] = len(log.births)
            row[f"{key}_dead_total"] = log.dead_total
            row[f"{key}_first_death"] = log.deaths[0] if log.deaths else None
        row["min_xi_T2"] = min(r.xi_t2 for r in records)
        return row
    except Exception as exc:  # per-point failures must not kill the sweep
        return {
            "index": index, "theta": theta, "phi": phi,
            "status": f"error: {exc}",
        }


def cmd_sweep(cfg: dict) -> int:
    thetas = parse_grid(cfg["theta_grid"]) if cfg["theta_grid"] is not None else [cfg["theta"]]
    phis = parse_grid(cfg["phi_grid"]) if cfg["phi_grid"] is not None else [cfg["phi"]]
    if not thetas or not phis:
        raise ValueError("sweep grid is empty")
    grid = [(theta, phi) for theta in thetas for phi in phis]
    with ThreadPoolExecutor(max_workers=max(1, cfg["threads"])) as pool:
        results = list(
            pool.map(lambda item: _sweep_point(cfg, item[0], *item[1]), enumerate(grid))
        )
    rows = [[row.get(col) for col in SWEEP_COLUMNS] for row in results]
    if cfg["format"] == "json":
        _write(json.dumps({"rows": results}) + "\n", cfg["out"])
    else:
        text = _csv(SWEEP_COLUMNS[:-1], [row[:-1] for row in rows])
        # status carries free text; keep it in the last column, unformatted
        lines = text.splitlines()
        lines[0] += ",status"
        for i, row in enumerate(results):
            lines[i + 1] += f",{row['status']}"
        _write("\n".join(lines) + "\n", cfg["out"])
    return 0 if all(row["status"] == "ok" for row in results) else 1


def _random_symmetric_states(spin: SpinQuantum, count: int, seed: int) -> list[StateVector]:
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(count):
        amp = rng.standard_normal(spin.dim) + 1j * rng.standard_normal(spin.dim)
        states.append(StateVector(spin, amp / np.linalg.norm(amp)))
    return states


def run_oracle_suite(n: int, seed: int = 0, n_states: int = 50, kicks: int = 5,
                     tolerance: float = ORACLE_TOLERANCE) -> dict:
    """Brute-force validation of every moment-based shortcut at small N.

    Checks, on seeded random symmetric states: the pair-state reconstruction
    against a full 2^N-space partial trace, the pair correlation matrix
    against direct two-site Pauli expectations, the minimal-correlation
    identity against exact minimization, concurrence agreement between both
    pair states, and Dicke-basis kicked-top evolution against the full-space
    Floquet operator.
    """
    if not 2 <= n <= 4:
        raise ValueError(f"oracle check supports N in 2..4, got {n}")
    spin = SpinQuantum(n)
    deviations = {
        "pair_state_reconstruction": 0.0,
        "pair_correlation_matrix": 0.0,
        "minimal_correlation_identity": 0.0,
        "concurrence_agreement": 0.0,
        "evolution_consistency": 0.0,
    }
    for state in _random_symmetric_states(spin, n_states, seed):
        m = moments(state)
        full = symmetric_embed(state)
        rho_rec = rho12_from_moments(m, n)
        rho_traced = partial_trace_pair(full, n)
        deviations["pair_state_reconstruction"] = max(
            deviations["pair_state_reconstruction"],
            float(np.max(np.abs(rho_rec.matrix - rho_traced.matrix))),
        )
        corr_brute = pair_correlation_brute(full, n)
        deviations["pair_correlation_matrix"] = max(
            deviations["pair_correlation_matrix"],
            float(np.max(np.abs(correlation_matrix(m, n) - corr_brute))),
        )
        deviations["minimal_correlation_identity"] = max(
            deviations["minimal_correlation_identity"],
            abs(c_min(m, n) - float(np.linalg.eigvalsh((corr_brute + corr_brute.T) / 2)[0])),
        )
        deviations["concurrence_agreement"] = max(
            deviations["concurrence_agreement"],
            abs(concurrence(rho_rec, n).concurrence - concurrence(rho_traced, n).concurrence),
        )

    # stroboscopic evolution cross-check: Dicke basis vs full product space
    params = KickedTopParams(spin, DEFAULTS["kappa"], DEFAULTS["p"])
    initial = coherent_spin_state(spin, DEFAULTS["theta"], DEFAULTS["phi"])
    dicke_states = evolve(initial, params, kicks)
    jx, jy, jz = collective_operators_full(n)
    w, v = np.linalg.eigh(jy)
    rotation = (v * np.exp(-1j * params.p * w)) @ v.conj().T
    twist = np.diag(np.exp(-1j * (params.kappa / (2 * spin.j)) * np.diag(jz).real ** 2))
    u_full = twist @ rotation
    psi_full = symmetric_embed(initial)
    for k in range(kicks + 1):
        embedded = symmetric_embed(dicke_states[k])
        deviations["evolution_consistency"] = max(
            deviations["evolution_consistency"],
            float(np.max(np.abs(psi_full - embedded))),
            abs(
                concurrence(partial_trace_pair(psi_full, n), n).concurrence
                - concurrence(rho12_from_moments(moments(dicke_states[k]), n), n).concurrence
            ),
        )
        if k < kicks:
            psi_full = u_full @ psi_full

    checks = {
        name: {"max_deviation": dev, "tolerance": tolerance, "pass": bool(dev < tolerance)}
        for name, dev in deviations.items()
    }
    return {
        "n": n,
        "seed": seed,
        "states": n_states,
        "kicks": kicks,
        "checks": checks,
        "pass": all(c["pass"] for c in checks.values()),
    }


def cmd_oracle_check(cfg: dict) -> int:
    report = run_oracle_suite(cfg["n"], cfg["seed"])
    _write(json.dumps(report, indent=2) + "\n", cfg["out"])
    if not report["pass"]:
        failing = [name for name, c in report["checks"].items() if not c["pass"]]
        print(f"oracle check failed: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kickedtop",
        description="Quantum kicked top: squeezing, concurrence, and sudden death/birth of entanglement",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser):
        p.add_argument("--n", type=int, help="number of spin-1/2 particles (default 50)")
        p.add_argument("--kappa", type=float, help="twist strength (default 3)")
        p.add_argument("--p", type=float, help="kick rotation angle (default pi/2)")
        p.add_argument("--theta", type=float, help="initial polar angle (default 2.25)")
        p.add_argument("--phi", type=float, help="initial azimuthal angle (default 0.63)")
        p.add_argument("--kicks", type=int, help="number of kicks (default 200)")
        p.add_argument("--eps", type=float, help="zero threshold for event detection (default 1e-9)")
        p.add_argument("--seed", type=int, help="random seed (default 0)")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")
        p.add_argument("--config", help="JSON config file; explicit flags override it")
        p.add_argument("--threads", type=int, help="worker threads for sweeps (default 1)")

    add_common(sub.add_parser("evolve", help="witness series of one trajectory"))

    p_map = sub.add_parser("classical-map", help="stroboscopic phase-space point cloud")
    add_common(p_map)
    p_map.add_argument("--states", type=int, help="number of random initial states (default 200)")

    add_common(sub.add_parser("directions", help="maximal-squeezing directions in the mean-spin frame"))

    p_sweep = sub.add_parser("sweep", help="event summaries over a grid of initial states")
    add_common(p_sweep)
    p_sweep.add_argument("--theta-grid", dest="theta_grid",
                         help="polar grid: comma-separated values or start:stop:count")
    p_sweep.add_argument("--phi-grid", dest="phi_grid",
                         help="azimuthal grid: comma-separated values or start:stop:count")

    add_common(sub.add_parser("oracle-check", help="brute-force validation suite at small N"))
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config) as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(cfg)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(loaded)
    for key in cfg:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    if args.command == "oracle-check":
        if not 2 <= cfg["n"] <= 4:
            raise ValueError("oracle-check requires --n in 2..4")
    elif cfg["n"] < 2:
        raise ValueError(f"need at least 2 particles, got --n {cfg['n']}")
    if cfg["kicks"] < 0:
        raise ValueError(f"--kicks must be >= 0, got {cfg['kicks']}")
    if cfg["eps"] <= 0:
        raise ValueError(f"--eps must be positive, got {cfg['eps']}")
    return cfg


COMMANDS = {
    "evolve": cmd_evolve,
    "classical-map": cmd_classical_map,
    "directions": cmd_directions,
    "sweep": cmd_sweep,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _merge_config(args)
        return COMMANDS[args.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
