"""Command-line interface.

Subcommands: compute (per-order, per-route coefficient rows), verify
(cross-route deltas against error budgets), volchkov (criterion integral,
both sides), scan (normalized integral sequence), fetch (populate the zero
cache). Reports are CSV (columns n, route, value, tail_bound,
truncation_height, wall_ms) or a JSON array of the same records.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .constants import DEFAULT_S_CAP
from .descriptors import load_descriptor, preset_descriptor, preset_names
from .errors import LiLabError
from .ingest import ZeroSource, fetch_remote_zeros, load_bundled_zeros, parse_ordinates
from .li import asymptotic_residual, li_arithmetic, li_decomposition, li_zero_sum
from .stieltjes import load_laurent, logderiv_coefficients, zeta_laurent
from .volchkov import asymptotic_scan, volchkov_integral

__all__ = ["RunConfig", "execute", "main"]

_ROUTE_CHOICES = ("zero_sum", "arithmetic", "decomposition")
_DEFAULT_TOLERANCES = {"zero_arith": 1e-4, "zero_decomp": 1e-3}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    descriptor_path: str = "zeta"
    zeros_source: ZeroSource = None
    laurent_path: str = None
    n_spec: tuple = ()
    routes: tuple = ("zero_sum",)
    output_format: str = "csv"
    output_path: str = None
    tolerance_overrides: dict = field(default_factory=dict)
    workers: int = 1
    s_cap: float = DEFAULT_S_CAP
    cache_dir: str = None


def parse_n_spec(spec: str):
    """Parse order lists like '5', '1..10', '1,2,8..12'."""
    ns = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo_s, _, hi_s = token.partition("..")
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise UsageError(f"bad order range {token!r}") from None
            if lo > hi:
                raise UsageError(f"empty order range {token!r}")
            ns.extend(range(lo, hi + 1))
        else:
            try:
                ns.append(int(token))
            except ValueError:
                raise UsageError(f"bad order {token!r}") from None
    if not ns:
        raise UsageError("no orders given")
    for n in ns:
        if n < 1:
            raise UsageError(f"orders must be >= 1, got {n}")
    return tuple(ns)


def _load_descriptor_arg(arg: str):
    if arg in preset_names():
        return preset_descriptor(arg)
    if not os.path.exists(arg):
        raise LiLabError(f"descriptor {arg!r} is neither a preset nor a file")
    return load_descriptor(arg)


def _load_table_arg(config: RunConfig):
    src = config.zeros_source
    if src is None:
        raise UsageError("this command needs --zeros or --label")
    if src.kind == "local_file" and src.path_or_label == "bundled":
        return load_bundled_zeros()
    cache = config.cache_dir or os.path.join(
        os.path.expanduser("~"), ".cache", "lilab"
    )
    return fetch_remote_zeros(src, cache)


def _load_laurent_arg(config: RunConfig):
    if config.laurent_path is None:
        return None
    if config.laurent_path == "zeta":
        return zeta_laurent()
    if not os.path.exists(config.laurent_path):
        raise LiLabError(f"Laurent file {config.laurent_path!r} not found")
    return load_laurent(config.laurent_path)


def _emit(rows, config: RunConfig):
    """Write report rows as CSV or a JSON record array; stdout when no path."""
    columns = ["n", "route", "value", "tail_bound", "truncation_height", "wall_ms"]
    if config.output_format == "json":
        text = json.dumps([{c: r.get(c) for c in columns} for r in rows], indent=2)
        text += "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(columns)
        for r in rows:
            writer.writerow(
                ["" if r.get(c) is None else r.get(c) for c in columns]
            )
        text = buf.getvalue()
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _row(n, route, value, tail_bound, truncation_height, wall_ms):
    return {
        "n": n,
        "route": route,
        "value": value,
        "tail_bound": tail_bound,
        "truncation_height": truncation_height,
        "wall_ms": wall_ms,
    }


def _evaluate(route, descriptor, table, laurent, n, s_cap):
    start = time.perf_counter()
    if route == "zero_sum":
        ev = li_zero_sum(descriptor, table, n)
    elif route == "arithmetic":
        ev = li_arithmetic(descriptor, laurent, n)
    elif route == "decomposition":
        ev = li_decomposition(descriptor, table, n, s_cap=s_cap)
    else:
        raise UsageError(f"unknown route {route!r}")
    wall_ms = 1000.0 * (time.perf_counter() - start)
    return _row(n, route, ev.value, ev.tail_bound, ev.truncation_height, wall_ms), ev


def _cmd_compute(config: RunConfig) -> int:
    descriptor = _load_descriptor_arg(config.descriptor_path)
    needs_table = any(r in ("zero_sum", "decomposition") for r in config.routes)
    table = _load_table_arg(config) if needs_table else None
    laurent = _load_laurent_arg(config)
    if "arithmetic" in config.routes and laurent is None:
        raise UsageError("the arithmetic route needs --laurent")

    jobs = [(n, route) for n in config.n_spec for route in config.routes]
    with ThreadPoolExecutor(max_workers=max(1, config.workers)) as pool:
        futures = [
            pool.submit(_evaluate, route, descriptor, table, laurent, n, config.s_cap)
            for n, route in jobs
        ]
        rows = [f.result()[0] for f in futures]  # submission order: deterministic
    _emit(rows, config)
    return 0


def _cmd_verify(config: RunConfig) -> int:
    descriptor = _load_descriptor_arg(config.descriptor_path)
    table = _load_table_arg(config)
    laurent = _load_laurent_arg(config)
    if laurent is None:
        raise UsageError("verify needs --laurent for the arithmetic route")
    tol = dict(_DEFAULT_TOLERANCES)
    tol.update(config.tolerance_overrides)

    failures = 0
    rows = []
    for n in config.n_spec:
        zs = li_zero_sum(descriptor, table, n)
        ar = li_arithmetic(descriptor, laurent, n)
        dc = li_decomposition(descriptor, table, n, s_cap=config.s_cap)
        checks = [
            ("zero_arith", abs(zs.value - ar.value), zs.tail_bound + tol["zero_arith"]),
            (
                "zero_decomp",
                abs(zs.value - dc.value),
                zs.tail_bound + dc.tail_bound + tol["zero_decomp"],
            ),
        ]
        for name, delta, budget in checks:
            ok = delta <= budget
            failures += 0 if ok else 1
            print(
                f"n={n:<4d} {name:<12s} delta={delta:.3e} budget={budget:.3e} "
                f"{'ok' if ok else 'FAIL'}"
            )
        for ev in (zs, ar, dc):
            rows.append(
                _row(n, ev.route, ev.value, ev.tail_bound, ev.truncation_height, None)
            )
    if config.output_path:
        _emit(rows, config)
    print(f"verify: {len(config.n_spec) * 2 - failures} checks passed, {failures} failed")
    return 1 if failures else 0


def _cmd_volchkov(config: RunConfig) -> int:
    descriptor = _load_descriptor_arg(config.descriptor_path)
    table = _load_table_arg(config)
    laurent = _load_laurent_arg(config)
    rep = volchkov_integral(descriptor, table, laurent, s_cap=config.s_cap)
    rows = [
        _row(1, "volchkov_integral", rep.value, rep.tail_bound, rep.truncation_height, None)
    ]
    print(f"integral (zero side)     = {rep.value:+.9f}  tail_bound={rep.tail_bound:.2e}")
    if rep.reference_value is not None:
        rows.append(_row(1, "volchkov_reference", rep.reference_value, 0.0, None, None))
        print(f"identity (Laurent side)  = {rep.reference_value:+.9f}")
        print(f"difference               = {abs(rep.value - rep.reference_value):.3e}")
    if laurent is not None:
        gamma0 = logderiv_coefficients(laurent)[0].real
        estimate = 3.0 * descriptor.polar_order + rep.value
        rows.append(_row(1, "euler_estimate", estimate, rep.tail_bound, None, None))
        rows.append(_row(1, "euler_reference", gamma0, 0.0, None, None))
        print(f"3m + integral            = {estimate:+.9f}")
        print(f"leading Laurent constant = {gamma0:+.9f}")
    if config.output_path:
        _emit(rows, config)
    return 0


def _cmd_scan(config: RunConfig) -> int:
    descriptor = _load_descriptor_arg(config.descriptor_path)
    table = _load_table_arg(config)
    entries = asymptotic_scan(descriptor, table, config.n_spec, s_cap=config.s_cap)
    rows = []
    for n, value, normalized in entries:
        rows.append(_row(n, "scan_value", value, None, table.coverage_height, None))
        rows.append(_row(n, "scan_normalized", normalized, None, table.coverage_height, None))
    _emit(rows, config)
    return 0


def _cmd_fetch(config: RunConfig) -> int:
    cache = config.cache_dir or os.path.join(os.path.expanduser("~"), ".cache", "lilab")
    table = fetch_remote_zeros(config.zeros_source, cache)
    print(
        f"fetched {len(table)} ordinates for {config.zeros_source.path_or_label!r} "
        f"(coverage {table.coverage_height:g}) into {cache}"
    )
    return 0


def execute(config: RunConfig) -> int:
    handlers = {
        "compute": _cmd_compute,
        "verify": _cmd_verify,
        "volchkov": _cmd_volchkov,
        "scan": _cmd_scan,
        "fetch": _cmd_fetch,
    }
    if config.command not in handlers:
        raise UsageError(f"unknown command {config.command!r}")
    return handlers[config.command](config)


def _add_common(sub, *, zeros=True, laurent=True, n_default=None, output=True):
    sub.add_argument(
        "--descriptor",
        default="zeta",
        help="preset name (%s) or path to a descriptor JSON file"
        % ", ".join(preset_names()),
    )
    if zeros:
        sub.add_argument(
            "--zeros",
            help="path to a zero-table file, or 'bundled' for the packaged table",
        )
        sub.add_argument("--label", help="remote zero-table label (needs --height)")
        sub.add_argument("--height", type=float, help="requested coverage height")
        sub.add_argument("--cache-dir", help="cache directory for fetched tables")
    if laurent:
        sub.add_argument(
            "--laurent",
            help="path to Laurent data JSON, or 'zeta' for the bundled constants",
        )
    if n_default is not None:
        sub.add_argument("--n", default=n_default, help="orders, e.g. '5', '1..10', '1,4,9'")
    if output:
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
        sub.add_argument("--output", help="report file path (default: stdout)")
    sub.add_argument("--s-cap", type=float, default=DEFAULT_S_CAP)
    sub.add_argument("--workers", type=int, default=1)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lilab",
        description="Numerical laboratory for generalized Li coefficients",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    compute = subs.add_parser("compute", help="evaluate coefficients per route")
    _add_common(compute, n_default="1..10")
    compute.add_argument(
        "--routes",
        default="zero_sum",
        help="comma list of: %s" % ", ".join(_ROUTE_CHOICES),
    )

    verify = subs.add_parser("verify", help="cross-route agreement checks")
    _add_common(verify, n_default="1..20")
    verify.add_argument(
        "--tol",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a tolerance (zero_arith, zero_decomp)",
    )

    volch = subs.add_parser("volchkov", help="criterion integral, both sides")
    _add_common(volch, n_default=None)

    scan = subs.add_parser("scan", help="normalized integral sequence over n")
    _add_common(scan, laurent=False, n_default="2,4,8,16,32,64,128,256,512")

    fetch = subs.add_parser("fetch", help="download a zero table into the cache")
    fetch.add_argument("--label", required=True)
    fetch.add_argument("--height", type=float, required=True)
    fetch.add_argument("--cache-dir")

    return parser


def _source_from_args(args) -> ZeroSource:
    zeros = getattr(args, "zeros", None)
    label = getattr(args, "label", None)
    if zeros and label:
        raise UsageError("give either --zeros or --label, not both")
    if zeros:
        return ZeroSource(kind="local_file", path_or_label=zeros)
    if label:
        height = getattr(args, "height", None)
        if height is None:
            raise UsageError("--label needs --height")
        return ZeroSource(kind="remote_label", path_or_label=label, requested_height=height)
    return None


def _config_from_args(args) -> RunConfig:
    tol = {}
    for item in getattr(args, "tol", []) or []:
        name, _, value = item.partition("=")
        if name not in _DEFAULT_TOLERANCES or not value:
            raise UsageError(f"bad tolerance override {item!r}")
        try:
            tol[name] = float(value)
        except ValueError:
            raise UsageError(f"bad tolerance override {item!r}") from None
    routes = tuple(
        r.strip() for r in getattr(args, "routes", "zero_sum").split(",") if r.strip()
    )
    for r in routes:
        if r not in _ROUTE_CHOICES:
            raise UsageError(f"unknown route {r!r}")
    n_spec = ()
    if getattr(args, "n", None) is not None:
        n_spec = parse_n_spec(args.n)
    return RunConfig(
        command=args.command,
        descriptor_path=getattr(args, "descriptor", "zeta"),
        zeros_source=_source_from_args(args),
        laurent_path=getattr(args, "laurent", None),
        n_spec=n_spec,
        routes=routes,
        output_format=getattr(args, "format", "csv"),
        output_path=getattr(args, "output", None),
        tolerance_overrides=tol,
        workers=getattr(args, "workers", 1),
        s_cap=getattr(args, "s_cap", DEFAULT_S_CAP),
        cache_dir=getattr(args, "cache_dir", None),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return execute(config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (LiLabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
