"""Command-line front end: figure presets, parameter scans, CSV export.

Every command writes one CSV dataset plus a JSON sidecar (<out>.meta.json)
recording the full configuration, truncations, package version and the
truncation convergence gate, so a dataset can be reproduced bit-exactly from
its metadata.  Floats are written with 17 significant digits and LF line
endings; identical configuration and build give byte-identical files.

Exit codes: 0 success, 2 configuration error, 3 convergence-gate failure,
4 a required rational period or anti-crossing does not exist.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__, dynamics, geometry, model, numerics
from .model import DisplacedBasis, RabiParams

DEFAULT_M = 50
SWEEP_VARS = ("g", "g1", "g2", "delta", "omega1", "omega2")
GATE_TOL = 1e-6


class ConfigError(ValueError):
    pass


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ConfigError("non-finite value in dataset")
        return format(value, ".17g")
    return str(value)


def write_dataset(path: str, header: list[str], rows: list[list],
                  metadata: dict) -> None:
    for row in rows:
        if len(row) != len(header):
            raise ConfigError("inconsistent column count")
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    metadata = dict(metadata)
    metadata["version"] = __version__
    metadata["columns"] = header
    metadata["rows"] = len(rows)
    with open(path + ".meta.json", "w") as fh:
        json.dump(metadata, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _max_workers() -> int:
    env = os.environ.get("RABI_GEOM_THREADS", "")
    if env:
        try:
            cap = int(env)
        except ValueError as exc:
            raise ConfigError(f"RABI_GEOM_THREADS={env!r} is not an integer") from exc
        if cap < 1:
            raise ConfigError("RABI_GEOM_THREADS must be positive")
        return cap
    return min(4, os.cpu_count() or 1)


def _parallel_map(fn, values):
    """Evaluate sweep points in parallel, results in sweep order."""
    with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        return list(pool.map(fn, values))


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def _parse_sweep(text: str) -> dict:
    parts = text.split(":")
    if len(parts) != 4:
        raise ConfigError("--sweep expects VAR:START:STOP:POINTS")
    var, start, stop, points = parts
    if var not in SWEEP_VARS:
        raise ConfigError(f"sweep variable must be one of {SWEEP_VARS}")
    try:
        start, stop, points = float(start), float(stop), int(points)
    except ValueError as exc:
        raise ConfigError(f"bad sweep specification {text!r}") from exc
    if points < 2:
        raise ConfigError("sweep needs at least 2 points")
    if not start < stop:
        raise ConfigError("sweep start must be below stop")
    return {"var": var, "start": start, "stop": stop, "points": points}


def load_config(args: argparse.Namespace) -> dict:
    """Merge config file values with command-line flags (flags win)."""
    cfg: dict = {}
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ConfigError("config file must hold a JSON object")
    for key in ("model", "omega1", "omega2", "g1", "g2", "delta",
                "trunc_m", "trunc_photons", "out", "levels"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    if getattr(args, "sweep", None) is not None:
        cfg["sweep"] = _parse_sweep(args.sweep)
    elif isinstance(cfg.get("sweep"), str):
        cfg["sweep"] = _parse_sweep(cfg["sweep"])
    if getattr(args, "rwa", False):
        cfg["mode"] = "rwa"
    if getattr(args, "full", False):
        cfg["mode"] = "full" if cfg.get("mode") != "rwa" else "both"
    if getattr(args, "drop_singlets", False):
        cfg["drop_singlets"] = True
    cfg.setdefault("model", "two-qubit")
    cfg.setdefault("mode", "both")
    cfg.setdefault("trunc_m", DEFAULT_M)
    cfg.setdefault("drop_singlets", False)
    if cfg["model"] not in ("jc", "two-qubit"):
        raise ConfigError(f"unknown model {cfg['model']!r}")
    return cfg


def params_from_config(cfg: dict, **overrides) -> RabiParams:
    vals = {k: cfg.get(k) for k in ("omega1", "omega2", "g1", "g2", "delta")}
    vals.update(overrides)
    delta = vals.get("delta")
    g1 = float(vals.get("g1") or 0.0)
    g2 = float(vals.get("g2") or 0.0)
    try:
        if cfg["model"] == "jc":
            if vals.get("omega1") is not None:
                return RabiParams(omega1=float(vals["omega1"]), g1=g1)
            return RabiParams.jc(float(delta or 0.0), g1)
        if vals.get("omega1") is not None:
            w1 = float(vals["omega1"])
            w2 = float(vals["omega2"]) if vals.get("omega2") is not None else w1
            return RabiParams(omega1=w1, omega2=w2, g1=g1, g2=g2)
        return RabiParams.equal_frequency(float(delta or 0.0), g1, g2)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def sweep_values(cfg: dict) -> tuple[str, np.ndarray]:
    sweep = cfg.get("sweep")
    if not sweep:
        raise ConfigError("this command needs --sweep VAR:START:STOP:POINTS")
    return sweep["var"], np.linspace(sweep["start"], sweep["stop"],
                                     sweep["points"])


def _sweep_overrides(var: str, value: float) -> dict:
    if var == "g":
        return {"g1": value, "g2": value}
    return {var: value}


# ---------------------------------------------------------------------------
# Convergence gate
# ---------------------------------------------------------------------------

def convergence_gate(phase_fn, m_base: int, probes) -> dict:
    """Drift of representative beyond-RWA phases when M grows by 10.

    ``phase_fn(params, M)`` must return a list of phases; the gate passes when
    the largest drift over the probe points stays below 1e-6.
    """
    drift = 0.0
    for pars in probes:
        base = np.asarray(phase_fn(pars, m_base))
        check = np.asarray(phase_fn(pars, m_base + 10))
        drift = max(drift, float(np.max(np.abs(base - check))))
    return {"m": m_base, "m_check": m_base + 10, "max_drift": drift,
            "tolerance": GATE_TOL, "passed": bool(drift < GATE_TOL)}


def _probe_points(params_list, limit: int = 3):
    if len(params_list) <= limit:
        return list(params_list)
    return [params_list[0], params_list[len(params_list) // 2], params_list[-1]]


def _beyond_rwa_eigenphases(pars: RabiParams, M: int) -> list[float]:
    basis = DisplacedBasis.for_params(pars, M=M)
    nop = model.sector_number_operator(basis)
    out = []
    for kappa in (1, -1):
        pairs = model.truncated_parity_solve(pars, basis, kappa,
                                             check_truncation=False)
        skip = set(model.singlet_indices(pars, pairs))
        kept = [p for j, p in enumerate(pairs) if j not in skip][:3]
        out.extend(2.0 * math.pi * float(p.coefficients @ nop @ p.coefficients)
                   for p in kept)
    return out


def _noneigen_phase(pars: RabiParams, M: int) -> list[float]:
    basis = DisplacedBasis.for_params(pars, M=M)
    return [geometry.noneigen_phase_beyond_rwa(pars, basis).gamma]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_spectrum(cfg: dict) -> int:
    var, values = sweep_values(cfg)
    M = int(cfg["trunc_m"])
    n_levels = int(cfg.get("levels") or 8)
    modes = {"rwa": ("rwa",), "full": ("full",), "both": ("rwa", "full")}[cfg["mode"]]
    drop = bool(cfg["drop_singlets"])

    def eval_point(value: float) -> list[list]:
        pars = params_from_config(cfg, **_sweep_overrides(var, value))
        rows = []
        if "rwa" in modes:
            for parity in (1, -1):
                levels = model.rwa_parity_levels(pars, parity, n_levels, drop)
                rows += [[value, "rwa", _parity_name(parity), i, float(e)]
                         for i, e in enumerate(levels)]
        if "full" in modes:
            basis = DisplacedBasis.for_params(pars, M=M)
            for parity in (1, -1):
                pairs = model.truncated_parity_solve(pars, basis, parity,
                                                     check_truncation=False)
                if drop:
                    skip = set(model.singlet_indices(pars, pairs))
                    pairs = [p for j, p in enumerate(pairs) if j not in skip]
                rows += [[value, "full", _parity_name(parity), i, p.energy]
                         for i, p in enumerate(pairs[:n_levels])]
        return rows

    groups = _parallel_map(eval_point, values)
    rows = [row for group in groups for row in group]
    meta = {"config": _json_safe(cfg), "command": "spectrum"}
    if "full" in modes:
        probes = _probe_points([params_from_config(cfg, **_sweep_overrides(var, v))
                                for v in values])
        meta["convergence_gate"] = convergence_gate(
            lambda pars, m: _sector_energy_probe(pars, m, n_levels, drop), M, probes)
        if cfg.get("trunc_photons"):
            meta["dual_basis_audit"] = _dual_basis_audit(
                probes[0], M, int(cfg["trunc_photons"]), n_levels, drop)
    else:
        meta["convergence_gate"] = {"applicable": False}
    write_dataset(cfg["out"], ["sweep_value", "model", "parity", "level", "energy"],
                  rows, meta)
    return _gate_exit(meta)


def _dual_basis_audit(pars: RabiParams, M: int, n_photons: int,
                      n_levels: int, drop: bool) -> dict:
    """Cross-check displaced-sector energies against a plain-Fock build.

    Spectra are compared unfiltered: singlet levels sit at exactly n omega_c
    in both constructions, so they cancel out of the deviation.
    """
    fm = model.build_full_rabi(pars, n_photons=n_photons)
    basis = DisplacedBasis.for_params(pars, M=M)
    worst = 0.0
    for kappa in (1, -1):
        plain, _, _ = model.solve_parity_sector(fm, kappa,
                                                check_truncation=False)
        disp = np.array([p.energy for p in model.truncated_parity_solve(
            pars, basis, kappa, check_truncation=False)[:n_levels]])
        worst = max(worst, float(np.max(np.abs(disp - plain[:n_levels]))))
    return {"n_photons": n_photons, "max_energy_deviation": worst}


def _sector_energy_probe(pars: RabiParams, M: int, n_levels: int,
                         drop: bool) -> list[float]:
    basis = DisplacedBasis.for_params(pars, M=M)
    out = []
    for kappa in (1, -1):
        pairs = model.truncated_parity_solve(pars, basis, kappa,
                                             check_truncation=False)
        if drop:
            skip = set(model.singlet_indices(pars, pairs))
            pairs = [p for j, p in enumerate(pairs) if j not in skip]
        out.extend(p.energy for p in pairs[:n_levels])
    return out


def _parity_name(parity: int) -> str:
    return "even" if parity == 1 else "odd"


def cmd_berry(cfg: dict) -> int:
    var, values = sweep_values(cfg)
    M = int(cfg["trunc_m"])
    include_full = cfg["mode"] in ("full", "both")

    def eval_point(value: float) -> list[list]:
        pars = params_from_config(cfg, **_sweep_overrides(var, value))
        gamma_rwa = {
            "psi0": 0.0,
            "psi1_2": geometry.berry_phase_equal_frequency(pars, 2).gamma,
            "psi1_3": geometry.berry_phase_equal_frequency(pars, 3).gamma,
        }
        if include_full:
            gamma_full = _counterpart_phases(pars, M)
            return [[value, name, gamma_rwa[name], gamma_full[name]]
                    for name in ("psi0", "psi1_2", "psi1_3")]
        return [[value, name, gamma_rwa[name]]
                for name in ("psi0", "psi1_2", "psi1_3")]

    groups = _parallel_map(eval_point, values)
    rows = [row for group in groups for row in group]
    header = ["sweep_value", "state", "gamma_rwa"]
    meta = {"config": _json_safe(cfg), "command": "berry"}
    if include_full:
        header.append("gamma_full")
        probes = _probe_points([params_from_config(cfg, **_sweep_overrides(var, v))
                                for v in values])
        meta["convergence_gate"] = convergence_gate(_beyond_rwa_eigenphases, M,
                                                    probes)
    else:
        meta["convergence_gate"] = {"applicable": False}
    write_dataset(cfg["out"], header, rows, meta)
    return _gate_exit(meta)


def _counterpart_phases(pars: RabiParams, M: int) -> dict[str, float]:
    """Beyond-RWA Berry phases of the states continuing Psi0, Psi1^2, Psi1^3.

    Psi0 continues into the lowest even level; the bright doublet continues
    into the two lowest non-singlet odd levels, lower rank matching Psi1^3.
    """
    basis = DisplacedBasis.for_params(pars, M=M)
    nop = model.sector_number_operator(basis)

    def kept(kappa):
        pairs = model.truncated_parity_solve(pars, basis, kappa,
                                             check_truncation=False)
        skip = set(model.singlet_indices(pars, pairs))
        return [p for j, p in enumerate(pairs) if j not in skip]

    def gamma(pair):
        c = pair.coefficients
        return 2.0 * math.pi * float(c @ nop @ c)

    even = kept(1)
    odd = kept(-1)
    return {"psi0": gamma(even[0]), "psi1_3": gamma(odd[0]),
            "psi1_2": gamma(odd[1])}


def cmd_curvature_field(cfg: dict) -> int:
    thetas = np.linspace(0.0, math.pi, int(cfg.get("levels") or 181))
    rows = []
    for label in ("eigen_jc", "eigen_two_qubit", "noneigen_jc",
                  "noneigen_two_qubit"):
        for s in geometry.radial_field(label, thetas, phis=(0.0,)):
            rows.append([label, s.theta, s.phi, s.F_radial])
    meta = {"config": _json_safe(cfg), "command": "curvature-field",
            "convergence_gate": {"applicable": False},
            "normalization": "max |F| on the unit sphere = 1"}
    write_dataset(cfg["out"], ["label", "theta", "phi", "F_radial_normalized"],
                  rows, meta)
    return 0


def cmd_noneigen(cfg: dict) -> int:
    var, values = sweep_values(cfg)
    M = int(cfg["trunc_m"])
    include_full = cfg["mode"] in ("full", "both")
    jump_threshold = 0.3

    def eval_point(value: float):
        pars = params_from_config(cfg, **_sweep_overrides(var, value))
        row = [value, pars.g1, pars.g2, pars.delta,
               geometry.noneigen_curvature_two_qubit(pars),
               geometry.vacuum_phase_two_qubit(pars).gamma]
        if include_full:
            basis = DisplacedBasis.for_params(pars, M=M)
            row.append(geometry.noneigen_phase_beyond_rwa(pars, basis).gamma)
        return row

    rows = _parallel_map(eval_point, values)
    header = ["sweep_value", "g1", "g2", "delta", "F_theta_phi", "gamma_rwa"]
    if include_full:
        header += ["gamma_full", "anticross_flag"]
        gammas = [r[-1] for r in rows]
        flags = _jump_flags(gammas, jump_threshold)
        rows = [r + [f] for r, f in zip(rows, flags)]
    meta = {"config": _json_safe(cfg), "command": "noneigen"}
    if include_full:
        probes = _probe_points([params_from_config(cfg, **_sweep_overrides(var, v))
                                for v in values])
        meta["convergence_gate"] = convergence_gate(_noneigen_phase, M, probes)
        meta["anticross_flag"] = ("1 when |gamma_full| changes by more than "
                                  f"{jump_threshold} between neighbours")
    else:
        meta["convergence_gate"] = {"applicable": False}
    write_dataset(cfg["out"], header, rows, meta)
    return _gate_exit(meta)


def _jump_flags(gammas: list[float], threshold: float) -> list[int]:
    flags = [0] * len(gammas)
    for i in range(len(gammas) - 1):
        if abs(gammas[i + 1] - gammas[i]) > threshold:
            flags[i] = flags[i + 1] = 1
    return flags


def cmd_evolve(cfg: dict) -> int:
    pars = params_from_config(cfg)
    steps = int(cfg.get("levels") or 2001)
    try:
        if cfg["model"] == "jc":
            res = dynamics.cyclic_evolution_jc(pars)
            p_int, q_int = res.windings[0], 0
        else:
            res = dynamics.cyclic_evolution_two_qubit(pars)
            p_int, q_int = res.windings[1], res.windings[2]
    except dynamics.NoRational as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    H, photon_numbers, initial = dynamics.k1_block(pars)
    duration = res.cycles * res.period
    avg = dynamics.average_photon_number(pars, duration,
                                         n_time_steps=max(steps, 1000))
    decomp = numerics.eigh(H)
    ts = np.linspace(0.0, duration, steps)
    rows = []
    for t in ts:
        psi = numerics.propagate(decomp, initial, t)
        nbar = float(photon_numbers @ (np.abs(psi) ** 2))
        fid = float(abs(np.vdot(initial, psi)))
        rows.append([t, nbar, fid, duration, p_int, q_int, res.total_phase,
                     res.dynamical_phase, res.aa_phase, avg.P,
                     avg.gamma_over_2pi])
    header = ["t", "photon_expectation", "fidelity", "T", "p", "q",
              "total_phase", "dynamical_phase", "aa_phase", "P_avg",
              "gamma_over_2pi"]
    meta = {"config": _json_safe(cfg), "command": "evolve",
            "convergence_gate": {"applicable": False},
            "summary": {"T": duration, "p": p_int, "q": q_int,
                        "total_phase": res.total_phase,
                        "dynamical_phase": res.dynamical_phase,
                        "aa_phase": res.aa_phase,
                        "recurrence_fidelity": res.recurrence_fidelity,
                        "P": avg.P, "gamma_over_2pi": avg.gamma_over_2pi}}
    write_dataset(cfg["out"], header, rows, meta)
    return 0


def cmd_scan_anticrossing(cfg: dict) -> int:
    M = int(cfg["trunc_m"])
    deltas = cfg.get("deltas") or [cfg.get("delta") or 0.5]
    g_min = float(cfg.get("g_min") or 0.2)
    g_max = float(cfg.get("g_max") or 0.32)
    rows = []
    for delta in deltas:
        def params_of_g(g: float, d=delta) -> RabiParams:
            return RabiParams.equal_frequency(d, g, g)
        try:
            ac = geometry.detect_anticrossing(params_of_g, kappa=1,
                                              g_min=g_min, g_max=g_max, M=M)
        except geometry.NoAnticrossing as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 4
        jump = geometry.locate_phase_jump(params_of_g, g_min, g_max, basis_M=M)
        rows.append([delta, ac.g_star, ac.min_gap, jump.g_jump,
                     jump.jump_size])
    meta = {"config": _json_safe(cfg), "command": "scan-anticrossing",
            "convergence_gate": {"applicable": False},
            "note": ("jump location tracks the steepest change of the exact "
                     "weighted phase; the initial state is odd under parity, "
                     "so it follows the odd-sector anti-crossing")}
    write_dataset(cfg["out"], ["delta", "g_star", "min_gap", "jump_g",
                               "jump_size"], rows, meta)
    return 0


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

def _preset_fig1(cfg: dict) -> int:
    cfg.setdefault("out", "fig1_curvature_field.csv")
    cfg["levels"] = cfg.get("levels") or 361
    return cmd_curvature_field(cfg)


def _preset_fig2(cfg: dict) -> int:
    cfg.setdefault("out", "fig2_noneigen_rwa.csv")
    rows = []
    g2s = np.linspace(0.001, 0.1, 200)
    for delta in (0.0, 0.05, -0.05, 0.2, -0.2):
        for g2 in g2s:
            for panel, g1 in (("a", g2), ("b", 0.02)):
                pars = RabiParams.equal_frequency(delta, g1, float(g2))
                rows.append([panel, delta, g1, float(g2),
                             geometry.noneigen_curvature_two_qubit(pars),
                             geometry.vacuum_phase_two_qubit(pars).gamma])
    meta = {"config": _json_safe(cfg), "command": "fig2",
            "convergence_gate": {"applicable": False},
            "detunings": "representative choice {0, +-0.05, +-0.2}"}
    write_dataset(cfg["out"], ["panel", "delta", "g1", "g2", "F_theta_phi",
                               "gamma_rwa"], rows, meta)
    return 0


def _preset_fig3(cfg: dict) -> int:
    cfg.setdefault("out", "fig3_spectrum.csv")
    cfg.setdefault("delta", 0.5)
    cfg["sweep"] = {"var": "g", "start": 0.001, "stop": 0.5, "points": 101}
    cfg["drop_singlets"] = True
    cfg["mode"] = "both"
    return cmd_spectrum(cfg)


def _preset_fig4(cfg: dict) -> int:
    cfg.setdefault("out", "fig4_berry.csv")
    cfg.setdefault("delta", 0.5)
    cfg["sweep"] = {"var": "g", "start": 0.005, "stop": 0.35, "points": 70}
    cfg["mode"] = "both"
    return cmd_berry(cfg)


def _preset_fig5(cfg: dict) -> int:
    cfg.setdefault("out", "fig5_noneigen.csv")
    code = 0
    base_out = cfg["out"]
    for tag, delta in (("p05", 0.5), ("m05", -0.5), ("p02", 0.2), ("m02", -0.2)):
        sub = dict(cfg)
        sub["delta"] = delta
        sub["sweep"] = {"var": "g", "start": 0.005, "stop": 0.35, "points": 70}
        sub["mode"] = "both"
        sub["out"] = base_out.replace(".csv", f"_{tag}.csv")
        code = max(code, cmd_noneigen(sub))
    return code


PRESETS = {"fig1": _preset_fig1, "fig2": _preset_fig2, "fig3": _preset_fig3,
           "fig4": _preset_fig4, "fig5": _preset_fig5}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _json_safe(obj):
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


def _gate_exit(meta: dict) -> int:
    gate = meta.get("convergence_gate", {})
    if gate.get("applicable", True) and not gate.get("passed", True):
        print(f"error: convergence gate failed, drift {gate['max_drift']:.3e}",
              file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabigeom",
        description="Spectra, Berry curvatures and vacuum-induced geometric "
                    "phases of the one- and two-qubit Rabi models")
    sub = parser.add_subparsers(dest="command", required=True)
    commands = ["spectrum", "berry", "curvature-field", "noneigen", "evolve",
                "scan-anticrossing"] + sorted(PRESETS)
    for name in commands:
        p = sub.add_parser(name)
        p.add_argument("--model", choices=["jc", "two-qubit"])
        p.add_argument("--rwa", action="store_true",
                       help="restrict to RWA results")
        p.add_argument("--full", action="store_true",
                       help="restrict to beyond-RWA results")
        p.add_argument("--omega1", type=float)
        p.add_argument("--omega2", type=float)
        p.add_argument("--g1", type=float)
        p.add_argument("--g2", type=float)
        p.add_argument("--delta", type=float)
        p.add_argument("--sweep", metavar="VAR:START:STOP:POINTS")
        p.add_argument("--trunc-m", dest="trunc_m", type=int)
        p.add_argument("--trunc-photons", dest="trunc_photons", type=int)
        p.add_argument("--levels", type=int,
                       help="levels per sector / grid points / time steps")
        p.add_argument("--out")
        p.add_argument("--config")
        p.add_argument("--drop-singlets", dest="drop_singlets",
                       action="store_true")
    return parser


DISPATCH = {"spectrum": cmd_spectrum, "berry": cmd_berry,
            "curvature-field": cmd_curvature_field, "noneigen": cmd_noneigen,
            "evolve": cmd_evolve, "scan-anticrossing": cmd_scan_anticrossing}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        if args.command in PRESETS:
            return PRESETS[args.command](cfg)
        if not cfg.get("out"):
            raise ConfigError("--out PATH is required")
        return DISPATCH[args.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except dynamics.NoRational as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except geometry.NoAnticrossing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
