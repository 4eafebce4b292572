"""Command-line front end: capacity, outage, sweep, simulate, verify."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from fractions import Fraction

from . import capacity, constraints, outage, verify
from .config import load_config
from .energy import EnergyModel, parse_rational, simulate
from .errors import NoWitnessError, ResourceLimitError


def _format_rational(q: Fraction) -> str:
    """Exact decimal when the denominator is 2^a * 5^b, else p/q."""
    den = q.denominator
    digits2 = digits5 = 0
    while den % 2 == 0:
        den //= 2
        digits2 += 1
    while den % 5 == 0:
        den //= 5
        digits5 += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(digits2, digits5)
    if digits == 0:
        return str(q.numerator)
    scaled = q * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _constraint_from_args(args: argparse.Namespace) -> constraints.ConstraintSpec:
    family = args.family
    if family == "rll":
        if args.d is None:
            raise ValueError("rll requires --d")
        return constraints.RLL(args.d)
    if family == "swc":
        if args.t is None or args.w is None:
            raise ValueError("swc requires --t and --w")
        return constraints.SWC(args.t, args.w)
    if family == "sec":
        if args.l is None or args.w is None:
            raise ValueError("sec requires --l and --w")
        return constraints.SEC(args.l, args.w)
    raise ValueError(f"unknown family {family!r}")


def _outage_params_text(result: outage.OutageResult, family: str) -> str:
    if result.params is None:
        return "no feasible code"
    if family == "rll":
        return f"d={result.params[0]}"
    if family in ("swc", "swc-lower"):
        return f"T={result.params[0]}, w={result.params[1]}"
    return f"L={result.params[0]}, w={result.params[1]}"


def _result_dict(result) -> dict:
    record = dataclasses.asdict(result)
    if "params" in record and record["params"] is not None:
        record["params"] = list(record["params"])
    return record


def cmd_capacity(args: argparse.Namespace, cfg: dict) -> int:
    if args.family == "rll":
        if args.d is None:
            raise ValueError("rll requires --d")
        res = capacity.rll_capacity(args.d, tol=cfg["root_tol"])
    elif args.family == "sec":
        if args.l is None or args.w is None:
            raise ValueError("sec requires --l and --w")
        res = capacity.sec_capacity(args.l, args.w)
    elif args.family == "sec-one-zero":
        if args.t is None:
            raise ValueError("sec-one-zero requires --t")
        res = capacity.sec_one_zero_capacity(args.t)
    else:
        if args.t is None or args.w is None:
            raise ValueError("swc requires --t and --w")
        budget = args.state_budget if args.state_budget is not None else cfg["state_budget"]
        if args.growth:
            nmax = args.nmax if args.nmax is not None else cfg["growth_nmax"]
            res = capacity.swc_capacity_growth(
                args.t, args.w, n_max=nmax, tol=cfg["growth_tol"], state_budget=budget
            )
        else:
            res = capacity.swc_capacity_exact(
                args.t, args.w, state_budget=budget, tol=cfg["spectral_tol"]
            )
    if args.json:
        print(json.dumps(_result_dict(res)))
    else:
        print(f"{res.value:.6f}")
    return 0


def cmd_outage(args: argparse.Namespace, cfg: dict) -> int:
    model = EnergyModel.make(args.b, args.emax)
    budget = args.state_budget if args.state_budget is not None else cfg["state_budget"]
    if args.family == "all":
        report = outage.gap_report(model, state_budget=budget, l_cap=args.lcap)
        if args.json:
            record = {
                key: _result_dict(val) if isinstance(val, outage.OutageResult) else val
                for key, val in report.items()
            }
            print(json.dumps(record))
        else:
            for key in ("o_rll", "o_swc", "o_sec"):
                res = report[key]
                family = key[2:]
                tag = "" if res.method == "exact" else f" [{res.method}]"
                print(f"{key}: {res.value:.6f} ({_outage_params_text(res, family)}){tag}")
            print(f"gap_swc_rll: {report['gap_swc_rll']:.6f}")
            print(f"gap_sec_rll: {report['gap_sec_rll']:.6f}")
            print(f"ceiling: {report['ceiling']:.6f}")
        return 0
    if args.family == "rll":
        res = outage.o_rll(model)
    elif args.family == "swc":
        res = outage.o_swc(model, state_budget=budget)
    elif args.family == "swc-lower":
        res = outage.o_swc_lower_explicit(model)
    elif args.family == "sec":
        res = outage.o_sec(model, l_cap=args.lcap)
    else:
        res = outage.o_sec_lower_explicit(model)
    if args.json:
        print(json.dumps(_result_dict(res)))
    else:
        tag = "" if res.method == "exact" else f" [{res.method}]"
        print(f"{res.value:.6f} ({_outage_params_text(res, args.family)}){tag}")
    return 0


def _sweep_grid(start: Fraction, stop: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise ValueError("--step must be positive")
    if stop < start:
        raise ValueError("--to must be >= --from")
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def cmd_sweep(args: argparse.Namespace, cfg: dict) -> int:
    budget = args.state_budget if args.state_budget is not None else cfg["state_budget"]
    start = parse_rational(args.start)
    stop = parse_rational(args.stop)
    step = parse_rational(args.step)
    rows = []
    for value in _sweep_grid(start, stop, step):
        if args.vary == "emax":
            model = EnergyModel(b=parse_rational(args.b), e_max=value, e_init=value)
        else:
            e_max = parse_rational(args.emax)
            model = EnergyModel(b=value, e_max=e_max, e_init=e_max)
        rll = outage.o_rll(model)
        swc = outage.o_swc(model, state_budget=budget)
        sec = outage.o_sec(model, l_cap=args.lcap)
        rows.append(
            [
                _format_rational(value),
                f"{rll.value:.6f}",
                f"{swc.value:.6f}",
                swc.method,
                f"{sec.value:.6f}",
                sec.method,
                f"{rll.ceiling:.6f}",
            ]
        )
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["param", "o_rll", "o_swc", "o_swc_method", "o_sec", "o_sec_method", "ceiling"]
        )
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_simulate(args: argparse.Namespace, cfg: dict) -> int:
    model = EnergyModel.make(args.b, args.emax, args.einit)
    params: dict = {
        "b": str(model.b),
        "e_max": str(model.e_max),
        "e_init": str(model.e_init),
    }
    if args.adversarial:
        spec = _constraint_from_args(args)
        bits = constraints.adversarial_sequence(spec, model, args.reps)
        params["family"] = args.family
        params.update(_spec_params(spec))
        params["repetitions"] = args.reps
    else:
        if args.bits is None:
            raise ValueError("simulate needs --bits, or --adversarial with a constraint family")
        bits = args.bits
        if args.family is not None:
            spec = _constraint_from_args(args)
            params["family"] = args.family
            params.update(_spec_params(spec))
            if not constraints.satisfies(spec, bits):
                raise ValueError(f"sequence {bits!r} violates {spec}")
    trace = simulate(bits, model)
    record = {
        "params": params,
        "bits": bits,
        "levels": [str(level) for level in trace.levels],
        "outages": trace.outages,
        "overflows": trace.overflows,
    }
    print(json.dumps(record))
    return 0


def _spec_params(spec: constraints.ConstraintSpec) -> dict:
    if isinstance(spec, constraints.RLL):
        return {"d": spec.d}
    if isinstance(spec, constraints.SWC):
        return {"t": spec.t, "w": spec.w}
    return {"l": spec.length, "w": spec.w}


def cmd_verify(args: argparse.Namespace, cfg: dict) -> int:
    checks = verify.run_suite(
        args.suite,
        max_n=args.max_n,
        max_len=args.max_n,
        reps_cap=args.reps_cap,
    )
    failed = [c for c in checks if not c.passed]
    if args.json:
        print(json.dumps([dataclasses.asdict(c) for c in checks]))
    else:
        for c in checks:
            if c.passed:
                print(f"ok   {c.name}")
            else:
                print(f"FAIL {c.name}: {c.detail}")
        print(f"{len(checks)} checks, {len(failed)} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capcomp",
        description="Capacities and outage-free rates of constrained binary codes",
    )
    parser.add_argument("--config", help="key=value file overriding built-in defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="noiseless capacity of one constraint")
    p.add_argument("--family", required=True, choices=["rll", "swc", "sec", "sec-one-zero"])
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--growth", action="store_true", help="use the growth-rate route for swc")
    p.add_argument("--nmax", type=int, help="growth-route length cap")
    p.add_argument("--state-budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("outage", help="best outage-free rate for a battery model")
    p.add_argument(
        "--family",
        required=True,
        choices=["rll", "swc", "sec", "swc-lower", "sec-lower", "all"],
    )
    p.add_argument("--b", required=True, help="per-use draw, exact rational")
    p.add_argument("--emax", required=True, help="buffer capacity, exact rational")
    p.add_argument("--state-budget", type=int)
    p.add_argument("--lcap", type=int, help="subblock search cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_outage)

    p = sub.add_parser("sweep", help="outage-free rates over a parameter grid, as CSV")
    p.add_argument("--vary", required=True, choices=["emax", "b"])
    p.add_argument("--b", help="fixed draw when varying emax")
    p.add_argument("--emax", help="fixed buffer when varying b")
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="stop", required=True)
    p.add_argument("--step", required=True)
    p.add_argument("--out", help="CSV path; stdout when omitted")
    p.add_argument("--state-budget", type=int)
    p.add_argument("--lcap", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="exact battery trace for a sequence, as JSON")
    p.add_argument("--b", required=True)
    p.add_argument("--emax", required=True)
    p.add_argument("--einit")
    p.add_argument("--bits")
    p.add_argument("--family", choices=["rll", "swc", "sec"])
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--adversarial", action="store_true", help="build a draining witness")
    p.add_argument("--reps", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run self-verification suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=["counts", "equivalence", "bounds", "outage", "all"],
    )
    p.add_argument("--max-n", type=int, help="length cap for enumeration-backed suites")
    p.add_argument("--reps-cap", type=int, help="witness search cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.command == "sweep":
            if args.vary == "emax" and args.b is None:
                raise ValueError("sweep --vary emax needs a fixed --b")
            if args.vary == "b" and args.emax is None:
                raise ValueError("sweep --vary b needs a fixed --emax")
        return args.func(args, cfg)
    except (ValueError, TypeError, ResourceLimitError, NoWitnessError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
