"""Command-line front end.

Subcommands:
  verify   run the verification suites for one or more delta values
  measure  sequential spin-measurement statistics (analytic + Monte Carlo)
  curve    emit a generalized uncertainty bound curve as CSV
  report   aggregate constants and suite summaries into one JSON document

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
configuration error (including exact backend with a non-square delta).

Monte Carlo sampling uses numpy's default_rng (PCG64); the same seed and
configuration produce byte-identical output files.  SMEARLAB_THREADS
caps the number of delta values verified concurrently (default 1).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from .backends import DEFAULT_TOL, EXACT, FLOAT, ExactSqrtError, get_backend
from .phase_space import DEFAULT_RAW_CONSTANTS, derive_constants, egup_bound
from .spin_one import (
    SmearingParams,
    build_one_particle,
    eigenbasis,
    measurement_outcomes,
)
from .suites import run_all_suites

SCHEMA = "smearlab-report/1"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _parse_delta(text: str) -> Fraction:
    """Accept '0.25', '1/4', '1e-6' style values; keep rationals exact."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad delta {text!r}: {exc}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"delta must be nonnegative: {text}")
    return value


def _to_builtin(obj):
    """json.dumps fallback for numpy scalars."""
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _json_dump(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True,
                      default=_to_builtin) + "\n"
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _thread_cap() -> int:
    raw = os.environ.get("SMEARLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    backend = get_backend(args.backend)
    deltas = args.delta or [Fraction(0), Fraction(1, 4)]
    try:
        if backend is EXACT:
            # fail fast on non-square deltas before spawning workers
            for d in deltas:
                backend.sqrt(d)

        def one(d):
            return [r.to_dict() for r in
                    run_all_suites(d, backend, args.tol, seed=args.seed)]

        workers = min(_thread_cap(), len(deltas))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                per_delta = list(pool.map(one, deltas))
        else:
            per_delta = [one(d) for d in deltas]
    except ExactSqrtError as exc:
        print(f"error: exact backend requires delta to be the square of a "
              f"rational: {exc}", file=sys.stderr)
        return EXIT_USAGE
    suites = [s for group in per_delta for s in group]
    overall = all(s["overall_pass"] for s in suites)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "backend": backend.name,
        "deltas": [str(d) for d in deltas],
        "tolerance": args.tol,
        "seed": args.seed,
        "overall_pass": overall,
        "suites": suites,
    }
    _json_dump(payload, args.out)
    for s in suites:
        status = "PASS" if s["overall_pass"] else "FAIL"
        print(f"[{status}] {s['suite']} delta={s['delta']} "
              f"backend={s['backend']}", file=sys.stderr)
    return EXIT_PASS if overall else EXIT_FAIL


_STATE_NAMES = ("up", "up'", "down", "down'")


def _prepare_state(spec: str, ops) -> np.ndarray:
    """Named fixture like up_z / down'_x, or a comma list of amplitudes
    (a+bj complex literals), normalized on input."""
    if "," in spec:
        try:
            amps = [complex(tok) for tok in spec.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad amplitude list {spec!r}: {exc}")
        if len(amps) != 4:
            raise ValueError("amplitude list must have 4 entries")
        vec = np.array(amps, dtype=complex)
        nrm = np.linalg.norm(vec)
        if nrm == 0:
            raise ValueError("zero state")
        return vec / nrm
    name, _, axis = spec.rpartition("_")
    if name not in _STATE_NAMES or axis not in ("x", "y", "z"):
        raise ValueError(
            f"unknown state {spec!r}; expected one of "
            f"{[n + '_<axis>' for n in _STATE_NAMES]} or 4 amplitudes")
    basis = eigenbasis(ops, axis, normalized=True)
    return {"up": basis.up, "up'": basis.up_prime,
            "down": basis.down, "down'": basis.down_prime}[name]


def _wilson(successes: int, n: int, z: float = 1.959963984540054) -> tuple:
    """95% Wilson score interval for a binomial proportion."""
    if n == 0:
        return (0.0, 1.0)
    phat = successes / n
    denom = 1.0 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def cmd_measure(args) -> int:
    params = SmearingParams.from_delta(float(args.delta[0]) if args.delta else 0.25)
    ops = build_one_particle(params, FLOAT)
    try:
        state = _prepare_state(args.state, ops)
        axes = [a.strip() for a in args.axes.split(",")]
        for a in axes:
            if a not in ("x", "y", "z"):
                raise ValueError(f"bad axis {a!r}")
        if not axes:
            raise ValueError("empty axis sequence")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    # walk the measurement chain: branches are (state, count); each axis
    # splits every branch binomially with its analytic Lueders probability
    branches = [(state, args.shots, [])]
    steps = []
    for axis in axes:
        nxt = []
        step_counts = {}
        for psi, count, history in branches:
            records = measurement_outcomes(psi, ops, axis)
            n_up = int(rng.binomial(count, records[0].probability)) if count else 0
            splits = ((records[0], n_up), (records[1], count - n_up))
            for rec, n in splits:
                key = tuple(history) + ((axis, "+" if rec.outcome > 0 else "-"),)
                step_counts[key] = step_counts.get(key, 0) + n
                if n and rec.post_state is not None:
                    nxt.append((rec.post_state, n, list(key)))
        branches = nxt
        steps.append({"axis": axis, "counts": step_counts})
    # analytic chain probabilities for the same branch keys
    analytic = {(): (state, 1.0)}
    for axis in axes:
        nxt = {}
        for key, (psi, prob) in analytic.items():
            if psi is None:
                continue
            for rec in measurement_outcomes(psi, ops, axis):
                sign = "+" if rec.outcome > 0 else "-"
                nxt[key + ((axis, sign),)] = (rec.post_state,
                                              prob * rec.probability)
        analytic = nxt
    final = steps[-1]["counts"]
    rows = []
    for key in sorted(final):
        n = final[key]
        lo, hi = _wilson(n, args.shots)
        rows.append({
            "outcomes": ["".join(pair) for pair in key],
            "count": n,
            "frequency": n / args.shots,
            "wilson_95": [lo, hi],
            "analytic": analytic.get(key, (None, 0.0))[1],
        })
    payload = {
        "schema": SCHEMA,
        "command": "measure",
        "state": args.state,
        "axes": axes,
        "delta": float(args.delta[0]) if args.delta else 0.25,
        "shots": args.shots,
        "seed": args.seed,
        "results": rows,
    }
    _json_dump(payload, args.out)
    return EXIT_PASS


def cmd_curve(args) -> int:
    if args.dx_min <= 0 or args.dx_max <= args.dx_min or args.dx_points < 2:
        print("error: need 0 < dx-min < dx-max and at least 2 points",
              file=sys.stderr)
        return EXIT_USAGE
    dx = np.linspace(args.dx_min, args.dx_max, args.dx_points)
    curve = egup_bound(args.alpha, args.eta, dx, hbar=args.hbar)
    lines = ["dx,dp_bound,feasible"]
    for s in curve.samples:
        dp = "" if not s.feasible else repr(float(s.dp_bound))
        lines.append(f"{float(s.dx)!r},{dp},{str(s.feasible).lower()}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_report(args) -> int:
    pc = derive_constants(DEFAULT_RAW_CONSTANTS)
    deltas = args.delta or [Fraction(0), Fraction(1, 4)]
    suites = []
    for d in deltas:
        for rep in run_all_suites(d, FLOAT, args.tol, seed=args.seed):
            suites.append({
                "suite": rep.suite,
                "delta": rep.delta,
                "backend": rep.backend,
                "overall_pass": rep.overall_pass,
                "max_residual": rep.max_residual,
                "checks": len(rep.checks),
            })
    overall = all(s["overall_pass"] for s in suites)
    payload = {
        "schema": SCHEMA,
        "command": "report",
        "constants": {
            "G": pc.G, "c": pc.c, "hbar": pc.hbar, "Lambda": pc.Lambda,
            "l_planck_cm": pc.l_planck, "m_planck_g": pc.m_planck,
            "l_desitter_cm": pc.l_desitter, "m_desitter_g": pc.m_desitter,
            "rho_lambda": pc.rho_lambda, "rho_planck": pc.rho_planck,
            "beta": pc.beta,
        },
        "delta_physical": pc.delta,
        "delta_order_of_magnitude": math.floor(math.log10(pc.delta)),
        "delta_in_expected_window": 1e-62 <= pc.delta <= 1e-60,
        "suite_summaries": suites,
        "overall_pass": overall,
    }
    _json_dump(payload, args.out)
    return EXIT_PASS if overall else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smearlab",
        description="Verification toolkit for smeared-space spin operators, "
                    "generalized uncertainty relations, and the 4-dim SU(2) "
                    "representation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--delta", action="append", type=_parse_delta,
                       help="smearing ratio; repeatable (default: 0 and 1/4)")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="absolute residual tolerance (float backend)")
        p.add_argument("--seed", type=int, default=0, help="RNG seed (PCG64)")
        p.add_argument("--out", help="output file path (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output format where applicable")

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify)
    p_verify.add_argument("--backend", choices=("float", "exact"),
                          default="float")
    p_verify.set_defaults(func=cmd_verify)

    p_measure = sub.add_parser("measure",
                               help="sequential measurement statistics")
    common(p_measure)
    p_measure.add_argument("--state", default="up_z",
                           help="named ket like up_z, down'_x, or 4 "
                                "comma-separated amplitudes")
    p_measure.add_argument("--axes", default="z,x",
                           help="comma-separated measurement axis sequence")
    p_measure.add_argument("--shots", type=int, default=100000)
    p_measure.set_defaults(func=cmd_measure)

    p_curve = sub.add_parser("curve", help="uncertainty bound curve CSV")
    common(p_curve)
    p_curve.add_argument("--alpha", type=float, default=0.0)
    p_curve.add_argument("--eta", type=float, default=0.0)
    p_curve.add_argument("--hbar", type=float, default=1.0)
    p_curve.add_argument("--dx-min", type=float, default=0.1)
    p_curve.add_argument("--dx-max", type=float, default=10.0)
    p_curve.add_argument("--dx-points", type=int, default=100)
    p_curve.set_defaults(func=cmd_curve)

    p_report = sub.add_parser("report", help="aggregate JSON report")
    common(p_report)
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "shots", 1) <= 0:
        print("error: --shots must be positive", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
