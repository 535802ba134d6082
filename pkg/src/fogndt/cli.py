"""fogndt command line: eval, sweep, audit, simulate.

Exit codes: 0 ok, 1 gap audit found a ratio above 3, 2 usage/validation,
3 I/O, 4 simulator reconstruction failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .bounds import gap_audit, lower_bound, optimality_gap
from .core import NetworkConfig, Scheme, pipelined_ndt, scheme_ndt
from .envelope import achievable_ndt, achievable_plan, regime_of
from .multicast import ProtocolViolation, check_report, run_delivery
from .sweep import (
    DEFAULT_QUANTITIES,
    QUANTITIES,
    SweepSpec,
    parse_values,
    resolve_mu,
    standard_grid,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO, EXIT_SIM = 0, 1, 2, 3, 4

SCHEME_COLUMNS = tuple(f"pl_{s.value}" for s in Scheme)


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """12 significant digits; infinities as ``inf``."""
    if math.isinf(x):
        return "inf"
    return f"{x:.12g}"


def _jsonable(obj):
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2)


def per_scheme_values(cfg: NetworkConfig) -> dict[str, float]:
    """Pipelined NDT of each scheme at its own cache point and the row's r."""
    native = {Scheme.ZF: 1.0, Scheme.IA: 1.0 / cfg.M, Scheme.CC: 1.0 / cfg.M, Scheme.CA: cfg.mu}
    return {
        f"pl_{s.value}": pipelined_ndt(scheme_ndt(s, cfg.at(mu=native[s]))) for s in Scheme
    }


def sweep_rows(spec: SweepSpec):
    for cfg in spec.points():
        ach = achievable_ndt(cfg)
        lb = lower_bound(cfg).best
        row = {"M": cfg.M, "K": cfg.K, "mu": cfg.mu, "r": cfg.r, "regime": regime_of(cfg)}
        if "achievable" in spec.quantities:
            row["achievable"] = ach
        if "lower_bound" in spec.quantities:
            row["lower_bound"] = lb
        if "gap" in spec.quantities:
            row["gap"] = optimality_gap(cfg)
        if "per_scheme" in spec.quantities:
            row.update(per_scheme_values(cfg))
        yield row


def sweep_header(spec: SweepSpec) -> list[str]:
    cols = ["M", "K", "mu", "r", "regime"]
    cols += [q for q in ("achievable", "lower_bound", "gap") if q in spec.quantities]
    if "per_scheme" in spec.quantities:
        cols += SCHEME_COLUMNS
    return cols


def write_sweep_csv(spec: SweepSpec, out) -> int:
    writer = csv.writer(out, lineterminator="\n")
    header = sweep_header(spec)
    writer.writerow(header)
    n = 0
    for row in sweep_rows(spec):
        writer.writerow(
            [row[c] if isinstance(row[c], (int, str)) else fmt(row[c]) for c in header]
        )
        n += 1
    return n


def _mu_arg(text: str, M: int) -> float:
    text = text.strip()
    return resolve_mu("1/M" if text == "1/M" else float(text), M)


def _config_from_args(args) -> NetworkConfig:
    try:
        mu = _mu_arg(args.mu, args.M)
    except ValueError:
        raise UsageError(f"--mu must be a number or 1/M, got {args.mu!r}") from None
    N = args.N if args.N is not None else args.K
    try:
        return NetworkConfig(args.M, args.K, N, mu, args.r)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _spec_from_args(args, default: SweepSpec | None = None) -> SweepSpec:
    if args.config:
        try:
            return SweepSpec.from_json(args.config)
        except (OSError, ValueError) as e:
            raise UsageError(f"bad config {args.config}: {e}") from None
    given = [args.M, args.K, args.mu, args.r]
    if default is not None and all(v is None for v in given):
        return default
    if any(v is None for v in given):
        raise UsageError("--M, --K, --mu and --r are all required (or pass --config)")
    try:
        quantities = tuple(args.quantities.split(",")) if args.quantities else DEFAULT_QUANTITIES
        return SweepSpec(
            M_values=parse_values(args.M, integer=True),
            K_values=parse_values(args.K, integer=True),
            mu_values=parse_values(args.mu, allow_one_over_m=True),
            r_values=parse_values(args.r),
            quantities=quantities,
            r_cap=args.r_cap,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_eval(args) -> int:
    cfg = _config_from_args(args)
    ach = achievable_ndt(cfg)
    bound = lower_bound(cfg)
    out = {
        "config": {"M": cfg.M, "K": cfg.K, "N": cfg.N, "mu": cfg.mu, "r": cfg.r},
        "achievable": ach,
        "plan": achievable_plan(cfg).to_dict(),
        "lower_bound": bound.to_dict(),
        "gap": optimality_gap(cfg),
        "regime": regime_of(cfg),
    }
    print(dump_json(out))
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = _spec_from_args(args)
    if args.output in (None, "-"):
        write_sweep_csv(spec, sys.stdout)
        return EXIT_OK
    buf = io.StringIO()
    write_sweep_csv(spec, buf)
    try:
        with open(args.output, "w", newline="") as f:
            f.write(buf.getvalue())
    except OSError as e:
        print(f"error: cannot write {args.output}: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_audit(args) -> int:
    spec = _spec_from_args(args, default=standard_grid())
    report = gap_audit(spec)
    print(dump_json(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_simulate(args) -> int:
    N = args.N if args.N is not None else args.K
    try:
        cfg = NetworkConfig(args.M, args.K, N, 1.0 / args.M if args.M >= 1 else 0.0, args.r)
        demand = parse_values(args.demand, integer=True) if args.demand else None
        report = run_delivery(cfg, args.L, args.seed, demand)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(dump_json(report.to_dict()))
    try:
        check_report(report)
    except ProtocolViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIM
    return EXIT_OK


def _add_point_flags(p, *, mu: bool = True):
    p.add_argument("--M", type=int, required=True, help="number of edge nodes")
    p.add_argument("--K", type=int, required=True, help="number of users")
    p.add_argument("--N", type=int, default=None, help="number of popular files (default K)")
    if mu:
        p.add_argument("--mu", required=True, help="fractional cache size, or the literal 1/M")
    p.add_argument("--r", type=float, required=True, help="fronthaul rate scaling")


def _add_grid_flags(p):
    p.add_argument("--M", help="edge node counts: a,b,c or start:stop:step")
    p.add_argument("--K", help="user counts")
    p.add_argument("--mu", help="cache fractions; 1/M allowed in lists")
    p.add_argument("--r", help="fronthaul rates")
    p.add_argument("--r-cap", type=float, default=None, help="drop r above this multiple of min(M,K)")
    p.add_argument(
        "--quantities", default=None, help=f"comma list from {','.join(QUANTITIES)}"
    )
    p.add_argument("--config", default=None, help="JSON file with SweepSpec fields")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fogndt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one operating point")
    _add_point_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="write a CSV over a parameter grid")
    _add_grid_flags(p)
    p.add_argument("--output", "-o", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("audit", help="check achievable <= 3 x lower bound over a grid")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("simulate", help="run the coded-multicast fronthaul protocol on random bits")
    _add_point_flags(p, mu=False)
    p.add_argument("--L", type=int, default=120, help="file size in bits (padded to a multiple of M)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--demand", default=None, help="comma list of 1-based file indices")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
