"""Command-line driver for the four experiment families.

Each run is configured by a key-value file, executes deterministically for a
fixed seed, writes a CSV report plus a JSON summary, and exits nonzero iff
any row fails its tolerance (or any error occurs).
"""

import argparse
import dataclasses
import sys
import time
from pathlib import Path

import numpy as np

from .anomaly import (anomaly_closed_form, anomaly_delta, build_projectors,
                      gauge_unitary, hs_offdiagonal)
from .blockop import multiplication_operator
from .config import KINDS, load_config
from .evolution import gauge_invariance_report
from .fock import build_fock, conjugation_identity_check, mode_window
from .lattice import make_lattice
from .reports import summarize, write_csv, write_summary
from .spinor import SpinorState
from .trigpoly import TrigPolynomial, periodic_fourier_coefficients

PLATEAU_TOL = 1e-10

ANOMALY_COLUMNS = ["L", "N", "d_f", "d_V", "T_plus", "T_minus", "delta",
                   "closed_form", "abs_error"]


def _poly(terms, L):
    return TrigPolynomial.from_harmonics(L, terms)


def _anomaly_core(f, chi, lattice, tol):
    start = time.perf_counter()
    rep = anomaly_delta(f, chi, lattice)
    duration = time.perf_counter() - start
    passed = rep.abs_error <= tol
    values = [rep.L, rep.N, rep.d_f, rep.d_v, rep.t_plus, rep.t_minus,
              rep.delta, rep.closed_form, rep.abs_error]
    return values, rep, passed, duration


def run_anomaly(cfg):
    lattice = make_lattice(cfg.L, cfg.N)
    f = _poly(cfg.f_terms, cfg.L)
    chi = _poly(cfg.chi_terms, cfg.L)
    values, rep, passed, duration = _anomaly_core(f, chi, lattice, cfg.tol)
    header = ["experiment"] + ANOMALY_COLUMNS + ["pass", "duration_s"]
    rows = [["anomaly"] + values + [passed, duration]]
    summary = summarize("anomaly", rows, [passed], rep.abs_error)
    return header, rows, summary, passed


def run_sweep(cfg):
    f_base = _poly(cfg.f_terms, cfg.L)
    chi_base = _poly(cfg.chi_terms, cfg.L)
    header = (["experiment", "axis", "value"] + ANOMALY_COLUMNS
              + ["pass", "duration_s"])
    rows = []
    flags = []
    deltas = []
    worst = 0.0
    for value in cfg.sweep_values:
        if cfg.sweep_axis == "N":
            lattice = make_lattice(cfg.L, int(value))
            f, chi = f_base, chi_base
        elif cfg.sweep_axis == "amplitude":
            lattice = make_lattice(cfg.L, cfg.N)
            f, chi = f_base, value * chi_base
        else:  # L
            lattice = make_lattice(float(value), cfg.N)
            f = _poly(cfg.f_terms, float(value))
            chi = _poly(cfg.chi_terms, float(value))
        values, rep, passed, duration = _anomaly_core(f, chi, lattice, cfg.tol)
        rows.append(["sweep", cfg.sweep_axis, value] + values
                    + [passed, duration])
        flags.append(passed)
        deltas.append(rep.delta)
        worst = max(worst, rep.abs_error)
    extra = {"axis": cfg.sweep_axis}
    all_pass = all(flags)
    if cfg.sweep_axis in ("N", "L"):
        spread = float(max(deltas) - min(deltas)) if deltas else 0.0
        extra["delta_spread"] = spread
        extra["spread_tolerance"] = PLATEAU_TOL
        all_pass = all_pass and spread <= PLATEAU_TOL
    summary = summarize("sweep", rows, flags, worst, extra)
    return header, rows, summary, all_pass


def _random_state(lattice, rng, max_modes=5):
    k = int(rng.integers(1, max_modes + 1))
    picks = rng.choice(lattice.dim, size=k, replace=False)
    coeffs = np.zeros(lattice.dim, dtype=complex)
    coeffs[picks] = rng.normal(size=k) + 1j * rng.normal(size=k)
    coeffs /= np.linalg.norm(coeffs)
    return SpinorState(lattice, coeffs)


def _random_gauge(L, rng):
    degree = int(rng.integers(1, 3))
    terms = [(float(rng.uniform(-1.0, 1.0)), h,
              float(rng.uniform(0.0, 2.0 * np.pi)))
             for h in range(1, degree + 1)]
    return TrigPolynomial.from_harmonics(L, terms)


def run_single_particle(cfg):
    lattice = make_lattice(cfg.L, cfg.N)
    rng = np.random.default_rng(cfg.seed)
    header = ["experiment", "case", "n_modes", "chi_degree", "time",
              "deviation", "reference", "abs_error", "pass", "duration_s"]
    rows = []
    flags = []
    worst = 0.0
    for case in range(cfg.cases):
        state = _random_state(lattice, rng)
        if case == 0:
            chi = _poly(cfg.chi_terms, cfg.L)
            t = cfg.time
        else:
            chi = _random_gauge(cfg.L, rng)
            t = float(rng.uniform(0.0, 3.0))
        start = time.perf_counter()
        deviation = gauge_invariance_report(state, chi, t)
        duration = time.perf_counter() - start
        passed = deviation <= cfg.tol
        n_modes = int(np.count_nonzero(state.coeffs))
        rows.append(["single-particle", case, n_modes, chi.degree, t,
                     deviation, 0.0, deviation, passed, duration])
        flags.append(passed)
        worst = max(worst, deviation)
    summary = summarize("single-particle", rows, flags, worst)
    return header, rows, summary, all(flags)


def run_fock(cfg):
    lattice = make_lattice(cfg.L, cfg.N)
    f = _poly(cfg.f_terms, cfg.L)
    chi = _poly(cfg.chi_terms, cfg.L)
    a = multiplication_operator(f, "sigma3", lattice)
    v = gauge_unitary(chi, lattice)
    modes = mode_window(lattice, cfg.fock_r_max, cfg.fock_include_surface)
    fock = build_fock(modes)
    start = time.perf_counter()
    res = conjugation_identity_check(a, v, fock)
    duration = time.perf_counter() - start
    scalar_err = abs(res.delta - res.closing_scalar)
    passed = res.residual <= cfg.tol and scalar_err <= cfg.tol
    reference = anomaly_closed_form(f, chi)
    header = ["experiment", "n_plus", "n_minus", "dim", "residual",
              "delta_finite", "delta_continuum_reference", "pass",
              "duration_s"]
    rows = [["fock", res.n_plus, res.n_minus, res.dim, res.residual,
             res.delta, reference, passed, duration]]
    summary = summarize("fock", rows, [passed],
                        max(res.residual, scalar_err),
                        {"pre_polar_defect": res.pre_polar_defect})
    return header, rows, summary, passed


def run_hs_check(cfg):
    header = ["experiment", "amplitude", "L", "N", "d_V", "hs_plus_sq",
              "hs_minus_sq", "group_spread", "pass", "duration_s"]
    rows = []
    flags = []
    worst = 0.0
    chi_base = _poly(cfg.chi_terms, cfg.L)
    for amp in cfg.hs_amplitudes:
        chi = amp * chi_base
        _, d_v, _ = periodic_fourier_coefficients(
            lambda z: np.exp(1j * chi(z)), cfg.L, 1e-15)
        cutoffs = cfg.hs_cutoffs or (3 * d_v, 3 * d_v + 8, 3 * d_v + 16)
        group = []
        for n in cutoffs:
            if n < 3 * d_v:
                raise ValueError(f"cutoff N={n} is below the plateau regime "
                                 f"(need N >= {3 * d_v} at amplitude {amp})")
            lattice = make_lattice(cfg.L, int(n))
            start = time.perf_counter()
            v = gauge_unitary(chi, lattice)
            plus_sq, minus_sq = hs_offdiagonal(v, build_projectors(lattice))
            duration = time.perf_counter() - start
            group.append((int(n), d_v, plus_sq, minus_sq, duration))
        values = [g[2] for g in group]
        spread = float(max(values) - min(values))
        worst = max(worst, spread)
        for n, d_v_n, plus_sq, minus_sq, duration in group:
            passed = spread <= cfg.tol
            rows.append(["hs-check", amp, cfg.L, n, d_v_n, plus_sq, minus_sq,
                         spread, passed, duration])
            flags.append(passed)
    summary = summarize("hs-check", rows, flags, worst)
    return header, rows, summary, all(flags)


RUNNERS = {
    "anomaly": run_anomaly,
    "sweep": run_sweep,
    "single-particle": run_single_particle,
    "fock": run_fock,
    "hs-check": run_hs_check,
}


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="diracsea",
        description="Gauge-anomaly experiments for massless fermions on a "
                    "circle")
    sub = parser.add_subparsers(dest="command", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind, help=f"run a {kind} experiment")
        p.add_argument("--config", required=True, help="configuration file")
        p.add_argument("--out", help="report directory (overrides config)")
        p.add_argument("--tol", type=float, help="tolerance override")
        p.add_argument("--seed", type=int, help="seed override")
    args = parser.parse_args(argv)

    try:
        cfg = load_config(args.config)
        overrides = {}
        if args.tol is not None:
            overrides["tol"] = args.tol
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.out is not None:
            overrides["out"] = args.out
        if overrides:
            cfg = dataclasses.replace(cfg, **overrides).validate()
        if cfg.kind != args.command:
            raise ValueError(f"config kind {cfg.kind!r} does not match "
                             f"subcommand {args.command!r}")
        header, rows, summary, all_pass = RUNNERS[cfg.kind](cfg)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out_dir = Path(cfg.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{cfg.kind}.csv"
    json_path = out_dir / f"{cfg.kind}.json"
    write_csv(csv_path, header, rows)
    write_summary(json_path, summary)

    for row in rows:
        verdict = "PASS" if row[-2] is True else "FAIL"
        print(f"{row[0]}: {verdict}  "
              + " ".join(f"{h}={v!r}" for h, v in zip(header[1:-2], row[1:-2])))
    print(f"report: {csv_path}  summary: {json_path}  "
          f"({summary['passed']}/{summary['rows']} rows pass)")
    return 0 if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
