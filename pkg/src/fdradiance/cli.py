"""Command-line front end: sweeps, figure data, and the acceptance runner.

Commands
--------
trajectory    (t, z) samples of the worldline, optionally with Penrose columns
energy        total radiated energy by the Larmor and/or spectral route
distribution  dI/dOmega samples over an (omega, theta) grid
spectrum      angle-integrated I(omega) or N(omega) curves
mirror        mode pairs (p, q) with |beta|^2, plus energy/count summaries
check         the ten-point acceptance suite

Exit codes: 0 success, 1 acceptance failure, 2 usage or validation error,
3 numerical failure. CSV output has a header row, 17-significant-digit
numbers, and LF line endings; JSON output is one object with "config",
"rows", and "summary" keys in stable lexicographic order. Grid sweeps may
fan out to a process pool (--threads); row order is fixed by the grid, not
by scheduling.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import math
import os
import sys

import numpy as np

from .acceptance import run_all
from .errors import DomainError, FdradianceError
from .mirror import (
    ModePair,
    beta_squared_fd,
    beta_squared_from_distribution,
    mirror_fd_energy,
    mirror_particle_count,
)
from .spectra import (
    EmissionDirection,
    distribution_exact_zeta0,
    distribution_numeric,
    energy_spectrum,
    fd_particle_count,
    fermi_dirac_distribution,
    total_energy_spectral,
)
from .trajectory import (
    E_SQUARED_DEFAULT,
    TrajectoryParams,
    coordinate_time,
    penrose_coordinates,
    position_at_time,
    total_energy_larmor,
)

__all__ = ["RunConfig", "main", "run_trajectory", "run_energy",
           "run_distribution", "run_spectrum", "run_mirror", "run_check"]


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: command, physics parameters, grids, output plan."""

    command: str
    params: TrajectoryParams
    grids: dict
    tol: float
    output_format: str
    output_path: str | None
    threads: int
    options: dict

    def __post_init__(self):
        if self.output_format not in ("csv", "json"):
            raise DomainError("format must be csv or json")
        if not (0.0 < self.tol <= 1e-2):
            raise DomainError("tol must lie in (0, 1e-2]")
        if self.threads < 1:
            raise DomainError("threads must be at least 1")


def _grid(name: str, lo: float, hi: float, steps: int) -> np.ndarray:
    if steps < 1:
        raise DomainError(f"{name} grid needs at least one step")
    if steps == 1:
        return np.array([float(lo)])
    if not (lo < hi):
        raise DomainError(f"{name} grid bounds must be strictly ascending")
    return np.linspace(float(lo), float(hi), int(steps))


def _pmap(func, jobs, threads):
    if threads <= 1 or len(jobs) <= 1:
        return [func(j) for j in jobs]
    workers = min(threads, len(jobs))
    chunk = max(1, len(jobs) // (4 * workers))
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, jobs, chunksize=chunk))


# Worker entry points live at module scope so a process pool can pickle them.

def _trajectory_row(job):
    kappa, zeta, e2, t, z, penrose = job
    params = TrajectoryParams(kappa, zeta, e2)
    if z is None:
        z = position_at_time(params, t)
    row = {"zeta": zeta, "t": t, "z": z}
    if penrose:
        U, V = penrose_coordinates(params, z)
        row["U"] = U
        row["V"] = V
    return row


def _energy_row(job):
    kappa, zeta, e2, method, tol = job
    params = TrajectoryParams(kappa, zeta, e2)
    scale = e2 * kappa
    if method == "both":
        e_larmor = total_energy_larmor(params, tol=min(tol, 1e-9))
        e_spectral = total_energy_spectral(params, tol=max(tol, 1e-6))
        return {
            "zeta": zeta,
            "E_larmor": e_larmor,
            "E_spectral": e_spectral,
            "rel_diff": abs(e_spectral - e_larmor) / abs(e_larmor),
            "E_larmor_over_e2kappa": e_larmor / scale,
            "E_spectral_over_e2kappa": e_spectral / scale,
        }
    if method == "larmor":
        value = total_energy_larmor(params, tol=min(tol, 1e-9))
    else:
        value = total_energy_spectral(params, tol=max(tol, 1e-6))
    return {"zeta": zeta, "method": method, "E": value,
            "E_over_e2kappa": value / scale}


def _distribution_row(job):
    kappa, zeta, e2, omega, theta, method, tol = job
    params = TrajectoryParams(kappa, zeta, e2)
    if method == "numeric":
        s = distribution_numeric(params, omega, EmissionDirection(theta), tol)
    elif method == "exact":
        s = distribution_exact_zeta0(kappa, e2, omega, EmissionDirection(theta))
    else:
        s = fermi_dirac_distribution(params, omega)
    return {"omega": s.omega, "omega_over_kappa": s.omega / kappa,
            "theta": s.theta, "method": s.method, "value": s.value,
            "abs_error": s.abs_error}


def _spectrum_row(job):
    kappa, zeta, e2, omega, kind, tol = job
    params = TrajectoryParams(kappa, zeta, e2)
    value = energy_spectrum(params, omega, tol)
    if kind == "particle-spectrum":
        value = value / omega
    return {"omega": omega, "omega_over_kappa": omega / kappa,
            "kind": kind, "value": value}


def _mirror_pair_row(job):
    kappa, zeta, p, q = job
    beta = beta_squared_fd(ModePair(p, q), kappa, zeta)
    return {"p": p, "q": q, "beta_squared": beta.beta_squared}


def _mirror_sample_row(job):
    kappa, zeta, e2, omega, theta, tol = job
    params = TrajectoryParams(kappa, zeta, e2)
    sample = distribution_numeric(params, omega, EmissionDirection(theta), tol)
    beta = beta_squared_from_distribution(sample, e2)
    return {"p": beta.modes.p, "q": beta.modes.q,
            "beta_squared": beta.beta_squared}


def run_trajectory(config: RunConfig):
    g = config.grids
    penrose = config.options["penrose"]
    jobs = []
    for zeta in g["zeta"]:
        params = TrajectoryParams(config.params.kappa, zeta,
                                  config.params.e_squared)
        if g.get("z") is not None:
            pairs = [(float(coordinate_time(params, z)), float(z))
                     for z in g["z"]]
        else:
            pairs = [(float(t), None) for t in g["t"]]
        pairs.sort(key=lambda tz: tz[0])
        jobs.extend((config.params.kappa, zeta, config.params.e_squared,
                     t, z, penrose) for t, z in pairs)
    rows = _pmap(_trajectory_row, jobs, config.threads)
    columns = ["zeta", "t", "z"] + (["U", "V"] if penrose else [])
    return rows, columns, {}


def run_energy(config: RunConfig):
    method = config.options["method"]
    jobs = [(config.params.kappa, float(z), config.params.e_squared,
             method, config.tol) for z in config.grids["zeta"]]
    rows = _pmap(_energy_row, jobs, config.threads)
    if method == "both":
        columns = ["zeta", "E_larmor", "E_spectral", "rel_diff",
                   "E_larmor_over_e2kappa", "E_spectral_over_e2kappa"]
    else:
        columns = ["zeta", "method", "E", "E_over_e2kappa"]
    return rows, columns, {}


def run_distribution(config: RunConfig):
    method = config.options["method"]
    zeta = config.params.zeta
    if method == "exact" and zeta != 0.0:
        raise DomainError("the exact closed form applies only at zeta = 0")
    methods = [method]
    if method == "all":
        methods = ["numeric"] + (["exact"] if zeta == 0.0 else []) + ["fd"]
    jobs = []
    for m in methods:
        if m == "fd":
            # the special-angle value is a function of omega alone
            jobs.extend((config.params.kappa, zeta, config.params.e_squared,
                         float(w), math.acos(zeta), m, config.tol)
                        for w in config.grids["omega"])
        else:
            jobs.extend((config.params.kappa, zeta, config.params.e_squared,
                         float(w), float(th), m, config.tol)
                        for w in config.grids["omega"]
                        for th in config.grids["theta"])
    rows = _pmap(_distribution_row, jobs, config.threads)
    columns = ["omega", "omega_over_kappa", "theta", "method", "value",
               "abs_error"]
    return rows, columns, {}


def run_spectrum(config: RunConfig):
    kind = config.options["kind"]
    kinds = (["energy-spectrum", "particle-spectrum"] if kind == "both"
             else [f"{kind}-spectrum"])
    jobs = [(config.params.kappa, config.params.zeta, config.params.e_squared,
             float(w), k, config.tol)
            for k in kinds for w in config.grids["omega"]]
    rows = _pmap(_spectrum_row, jobs, config.threads)
    columns = ["omega", "omega_over_kappa", "kind", "value"]
    return rows, columns, {}


def run_mirror(config: RunConfig):
    kappa = config.params.kappa
    zeta = config.params.zeta
    e2 = config.params.e_squared
    if config.options["p"] is not None or config.options["q"] is not None:
        if config.options["p"] is None or config.options["q"] is None:
            raise DomainError("give both --p and --q or neither")
        jobs = [(kappa, zeta, float(config.options["p"]),
                 float(config.options["q"]))]
        rows = _pmap(_mirror_pair_row, jobs, 1)
    elif config.grids.get("omega") is not None:
        jobs = [(kappa, zeta, e2, float(w), float(th), config.tol)
                for w in config.grids["omega"] for th in config.grids["theta"]]
        rows = _pmap(_mirror_sample_row, jobs, config.threads)
    else:
        jobs = []
        for u in config.grids["pq"]:
            p = float(u) * (1.0 + zeta) / 2.0
            q = float(u) * (1.0 - zeta) / 2.0
            jobs.append((kappa, zeta, p, q))
        rows = _pmap(_mirror_pair_row, jobs, config.threads)
    summary = {
        "fd_energy": mirror_fd_energy(kappa, zeta),
        "particle_count": mirror_particle_count(zeta),
    }
    if config.options["duality"]:
        params = TrajectoryParams(kappa, zeta, e2)
        electron_over_e2 = fd_particle_count(params) / e2
        summary["electron_count_over_e2"] = electron_over_e2
        summary["duality_rel_diff"] = (
            abs(electron_over_e2 - summary["particle_count"])
            / summary["particle_count"]
        )
    return rows, ["p", "q", "beta_squared"], summary


def run_check(config: RunConfig):
    results = run_all(tolerance_scale=config.options["tolerance_scale"],
                      criteria=config.options["criteria"])
    rows = [{
        "criterion": r.index, "name": r.name, "measured": r.measured,
        "target": r.target, "passed": r.passed, "runtime": r.runtime,
        "detail": r.detail,
    } for r in results]
    columns = ["criterion", "name", "measured", "target", "passed",
               "runtime", "detail"]
    summary = {"all_passed": all(r.passed for r in results),
               "lines": [r.line() for r in results]}
    return rows, columns, summary


def _format_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _write_csv(stream, rows, columns, summary):
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_format_cell(row[c]) for c in columns) + "\n")
    for key in sorted(summary):
        if key == "lines":
            continue
        stream.write(f"# {key},{_format_cell(summary[key])}\n")


def _jsonable(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _write_json(stream, rows, columns, summary, config_echo):
    doc = {
        "config": config_echo,
        "rows": [{c: _jsonable(r[c]) for c in columns} for r in rows],
        "summary": {k: _jsonable(v) for k, v in summary.items()
                    if k != "lines"},
    }
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")


def _add_common(sub, *, zeta_sweep=False):
    sub.add_argument("--kappa", type=float, default=1.0,
                     help="acceleration scale (default 1.0)")
    sub.add_argument("--zeta", type=float, default=0.0,
                     help="shape parameter in (-1, 1) (default 0)")
    sub.add_argument("--e-squared", type=float, default=E_SQUARED_DEFAULT,
                     help="squared charge (default 4*pi*alpha)")
    sub.add_argument("--tol", type=float, default=1e-8,
                     help="relative tolerance (default 1e-8)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", default=None, metavar="PATH",
                     help="write to PATH instead of standard output")
    sub.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                     help="worker processes for grid sweeps")
    if zeta_sweep:
        sub.add_argument("--zeta-min", type=float, default=None)
        sub.add_argument("--zeta-max", type=float, default=None)
        sub.add_argument("--zeta-steps", type=int, default=None)


def _add_omega_theta(sub, omega_default=(0.1, 5.0, 25),
                     theta_default=(0.0, math.pi, 19)):
    sub.add_argument("--omega-min", type=float, default=omega_default[0])
    sub.add_argument("--omega-max", type=float, default=omega_default[1])
    sub.add_argument("--omega-steps", type=int, default=omega_default[2])
    sub.add_argument("--theta-min", type=float, default=theta_default[0])
    sub.add_argument("--theta-max", type=float, default=theta_default[1])
    sub.add_argument("--theta-steps", type=int, default=theta_default[2])


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fdradiance",
        description="Radiation spectrum of a charge on a Fermi-Dirac "
                    "trajectory, and its moving-mirror dual.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    t = subs.add_parser("trajectory", help="worldline samples z(t)")
    _add_common(t, zeta_sweep=True)
    t.add_argument("--t", type=float, default=None,
                   help="single coordinate time")
    t.add_argument("--t-min", type=float, default=None,
                   help="t grid (default -5..5, 101 steps)")
    t.add_argument("--t-max", type=float, default=None)
    t.add_argument("--t-steps", type=int, default=None)
    t.add_argument("--z-min", type=float, default=None)
    t.add_argument("--z-max", type=float, default=None)
    t.add_argument("--z-steps", type=int, default=None)
    t.add_argument("--penrose", action="store_true",
                   help="add compactified null coordinate columns U, V")

    e = subs.add_parser(
        "energy", help="total radiated energy",
        description="Total radiated energy. The worldline-integral route "
                    "honors --tol down to 1e-9; the spectral route floors "
                    "it at 1e-6 because its cost grows steeply.")
    _add_common(e, zeta_sweep=True)
    e.add_argument("--method", choices=("larmor", "spectral", "both"),
                   default="larmor")

    d = subs.add_parser("distribution", help="dI/dOmega over an (omega, theta) grid")
    _add_common(d)
    _add_omega_theta(d)
    d.add_argument("--method", choices=("numeric", "exact", "fd", "all"),
                   default="numeric")

    s = subs.add_parser("spectrum", help="angle-integrated I(omega) or N(omega)")
    _add_common(s)
    s.add_argument("--omega-min", type=float, default=0.1)
    s.add_argument("--omega-max", type=float, default=5.0)
    s.add_argument("--omega-steps", type=int, default=25)
    s.add_argument("--kind", choices=("energy", "particle", "both"),
                   default="energy")

    m = subs.add_parser("mirror", help="mode pairs and |beta|^2")
    _add_common(m)
    m.add_argument("--pq-min", type=float, default=0.1,
                   help="lower bound of the total frequency p+q grid")
    m.add_argument("--pq-max", type=float, default=5.0)
    m.add_argument("--pq-steps", type=int, default=25)
    m.add_argument("--omega-min", type=float, default=None,
                   help="with --omega-*/--theta-*: map an emission grid instead")
    m.add_argument("--omega-max", type=float, default=None)
    m.add_argument("--omega-steps", type=int, default=None)
    m.add_argument("--theta-min", type=float, default=0.0)
    m.add_argument("--theta-max", type=float, default=math.pi)
    m.add_argument("--theta-steps", type=int, default=19)
    m.add_argument("--p", type=float, default=None,
                   help="single explicit right-mode frequency")
    m.add_argument("--q", type=float, default=None,
                   help="single explicit left-mode frequency")
    m.add_argument("--duality", action="store_true",
                   help="add the electron-side count comparison to the summary")

    c = subs.add_parser("check", help="run the acceptance suite")
    _add_common(c)
    c.add_argument("--tolerance-scale", type=float, default=1.0,
                   help="multiply all scalable tolerances (0 must fail)")
    c.add_argument("--criteria", default=None,
                   help="comma-separated criterion indices, e.g. 1,4,9")
    return parser


def _config_from(ns) -> RunConfig:
    params = TrajectoryParams(ns.kappa, ns.zeta, ns.e_squared)
    grids: dict = {}
    options: dict = {}

    if ns.command in ("trajectory", "energy"):
        if ns.zeta_min is not None or ns.zeta_max is not None \
                or ns.zeta_steps is not None:
            if None in (ns.zeta_min, ns.zeta_max, ns.zeta_steps):
                raise DomainError("give all of --zeta-min/--zeta-max/--zeta-steps")
            grids["zeta"] = _grid("zeta", ns.zeta_min, ns.zeta_max, ns.zeta_steps)
            for z in grids["zeta"]:
                TrajectoryParams(ns.kappa, float(z), ns.e_squared)
        else:
            grids["zeta"] = np.array([ns.zeta])

    if ns.command == "trajectory":
        z_given = any(v is not None for v in (ns.z_min, ns.z_max, ns.z_steps))
        t_given = any(v is not None for v in (ns.t_min, ns.t_max, ns.t_steps))
        families = sum([z_given, t_given, ns.t is not None])
        if families > 1:
            raise DomainError("give exactly one of --t, a --t-* grid, "
                              "or a --z-* grid")
        if z_given:
            if None in (ns.z_min, ns.z_max, ns.z_steps):
                raise DomainError("give all of --z-min/--z-max/--z-steps")
            grids["z"] = _grid("z", ns.z_min, ns.z_max, ns.z_steps)
            if not np.all(grids["z"] > 0.0):
                raise DomainError("z grid must be positive")
        elif ns.t is not None:
            grids["t"] = np.array([ns.t])
        elif t_given:
            if None in (ns.t_min, ns.t_max, ns.t_steps):
                raise DomainError("give all of --t-min/--t-max/--t-steps")
            grids["t"] = _grid("t", ns.t_min, ns.t_max, ns.t_steps)
        else:
            grids["t"] = _grid("t", -5.0, 5.0, 101)
        options["penrose"] = bool(ns.penrose)

    if ns.command == "energy":
        options["method"] = ns.method

    if ns.command == "distribution":
        grids["omega"] = _grid("omega", ns.omega_min, ns.omega_max, ns.omega_steps)
        if not np.all(grids["omega"] > 0.0):
            raise DomainError("omega grid must be positive")
        grids["theta"] = _grid("theta", ns.theta_min, ns.theta_max, ns.theta_steps)
        if not (np.all(grids["theta"] >= 0.0) and np.all(grids["theta"] <= math.pi)):
            raise DomainError("theta grid must lie in [0, pi]")
        options["method"] = ns.method

    if ns.command == "spectrum":
        grids["omega"] = _grid("omega", ns.omega_min, ns.omega_max, ns.omega_steps)
        if not np.all(grids["omega"] > 0.0):
            raise DomainError("omega grid must be positive")
        options["kind"] = ns.kind

    if ns.command == "mirror":
        options["p"] = ns.p
        options["q"] = ns.q
        options["duality"] = bool(ns.duality)
        if ns.omega_min is not None or ns.omega_max is not None \
                or ns.omega_steps is not None:
            if None in (ns.omega_min, ns.omega_max, ns.omega_steps):
                raise DomainError("give all of --omega-min/--omega-max/--omega-steps")
            grids["omega"] = _grid("omega", ns.omega_min, ns.omega_max,
                                   ns.omega_steps)
            if not np.all(grids["omega"] > 0.0):
                raise DomainError("omega grid must be positive")
            grids["theta"] = _grid("theta", ns.theta_min, ns.theta_max,
                                   ns.theta_steps)
            if not (np.all(grids["theta"] >= 0.0)
                    and np.all(grids["theta"] <= math.pi)):
                raise DomainError("theta grid must lie in [0, pi]")
        else:
            grids["pq"] = _grid("pq", ns.pq_min, ns.pq_max, ns.pq_steps)
            if not np.all(grids["pq"] > 0.0):
                raise DomainError("p+q grid must be positive")

    if ns.command == "check":
        options["tolerance_scale"] = ns.tolerance_scale
        if ns.criteria is None:
            options["criteria"] = None
        else:
            try:
                options["criteria"] = [int(tok) for tok in ns.criteria.split(",")]
            except ValueError as exc:
                raise DomainError(f"bad --criteria value: {ns.criteria}") from exc

    return RunConfig(
        command=ns.command, params=params, grids=grids, tol=ns.tol,
        output_format=ns.format, output_path=ns.output,
        threads=ns.threads, options=options,
    )


_RUNNERS = {
    "trajectory": run_trajectory,
    "energy": run_energy,
    "distribution": run_distribution,
    "spectrum": run_spectrum,
    "mirror": run_mirror,
    "check": run_check,
}


def _config_echo(ns) -> dict:
    echo = {}
    for key, value in sorted(vars(ns).items()):
        if key == "command":
            continue
        echo[key] = _jsonable(value)
    return echo


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _config_from(ns)
        rows, columns, summary = _RUNNERS[config.command](config)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FdradianceError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3

    if config.command == "check" and config.output_format == "csv" \
            and config.output_path is None:
        for line in summary["lines"]:
            print(line)
        return 0 if summary["all_passed"] else 1

    stream = (open(config.output_path, "w", encoding="utf-8", newline="")
              if config.output_path else sys.stdout)
    try:
        if config.output_format == "csv":
            _write_csv(stream, rows, columns, summary)
        else:
            _write_json(stream, rows, columns, summary, _config_echo(ns))
    finally:
        if config.output_path:
            stream.close()
    if config.command == "check":
        for line in summary["lines"]:
            print(line, file=sys.stderr)
        return 0 if summary["all_passed"] else 1
    return 0
