"""Command-line front end: determinant queries, sweep tables, the full
verification suite, and a method benchmark.

Exit codes: 0 when every computed method pair agrees (or nothing to
compare), 2 on any disagreement or failed verification, 1 on usage errors.
Output is deterministic for identical invocations and seeds, except for
the elapsed-time fields.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import statistics
import sys
import time
from dataclasses import dataclass, field

from . import binomial, circulant
from . import verify as verify_mod
from .binomial import ClosedForm, UnsupportedZ
from .circulant import DomainMismatch
from .gaussint import GaussInt

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2

DEFAULT_RTOL = 1e-6
RTOL_ENV = "CIRCDET_RTOL"

# The spectral benchmark runs on the z=i family, whose row entries exceed
# the double range once C(n-1, (n-1)//2) passes ~1.8e308 (n around 1030).
_BENCH_DFT_CAP = 1024
_BENCH_EXACT_CAP = 256

_CSV_COLUMNS = ("n", "z", "orientation", "closed_form",
                "spectral_re", "spectral_im", "exact", "agree")


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve that
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_scalar(text: str):
    """Parse a z literal: 1, -1, i, -i, or a+bi with decimal a, b.

    Returns a GaussInt when both parts are integral, else a complex.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    if s.endswith("i"):
        body = s[:-1]
        split = 0
        for p in range(len(body) - 1, 0, -1):
            if body[p] in "+-":
                split = p
                break
        re_text, im_text = body[:split], body[split:]
        re_val = _parse_part(re_text, "0")
        im_val = _parse_part(im_text, "1")
    else:
        re_val = _parse_part(s, None)
        im_val = 0
    if re_val == 0 and im_val == 0:
        raise ValueError("z must be nonzero")
    if isinstance(re_val, int) and isinstance(im_val, int):
        return GaussInt(re_val, im_val)
    return complex(re_val, im_val)


def _parse_part(text: str, empty_default: str | None):
    if text in ("", "+", "-"):
        if empty_default is None:
            raise ValueError(f"malformed scalar literal part {text!r}")
        text = text + empty_default
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"malformed scalar literal part {text!r}") from None
    if math.isnan(value) or math.isinf(value):
        raise ValueError("scalar literal must be finite")
    return int(value) if value.is_integer() else value


def format_scalar(z) -> str:
    """Canonical a+bi rendering with an explicit sign on the imaginary part."""
    if isinstance(z, GaussInt):
        return str(z)
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


@dataclass
class DetReport:
    """All determinant values computed for one (n, z, orientation) cell."""

    n: int
    z_text: str
    orientation: str
    closed: ClosedForm | None = None
    spectral: complex | None = None
    exact: GaussInt | None = None
    agreement: dict[str, dict] = field(default_factory=dict)
    elapsed_us: dict[str, int] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return all(v["agree"] for v in self.agreement.values()) and not self.notes

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        d: dict = {"n": self.n, "z": self.z_text, "orientation": self.orientation}
        if self.closed is not None:
            d["closed_form"] = self.closed.value.to_json()
            d["case"] = self.closed.case
        if self.spectral is not None:
            d["spectral"] = {"re": self.spectral.real, "im": self.spectral.imag}
        if self.exact is not None:
            d["exact"] = self.exact.to_json()
        d["agreement"] = self.agreement
        if self.notes:
            d["notes"] = self.notes
        if include_elapsed:
            d["elapsed_us"] = self.elapsed_us
        return d

    def to_csv_row(self) -> list[str]:
        agree = ""
        if self.agreement:
            agree = "true" if self.all_agree else "false"
        elif self.notes:
            agree = "false"
        return [
            str(self.n),
            self.z_text,
            self.orientation,
            str(self.closed.value) if self.closed is not None else "",
            repr(self.spectral.real) if self.spectral is not None else "",
            repr(self.spectral.imag) if self.spectral is not None else "",
            str(self.exact) if self.exact is not None else "",
            agree,
        ]


def _gauss_to_complex(g: GaussInt) -> complex | None:
    try:
        return g.to_complex()
    except OverflowError:
        return None


def compute_report(n: int, z, z_text: str, orientation: str,
                   methods: list[str], rtol: float) -> DetReport:
    report = DetReport(n=n, z_text=z_text, orientation=orientation)
    gz = binomial.as_gaussian(z)
    for method in methods:
        t0 = time.perf_counter_ns()
        try:
            if method == "closed":
                report.closed = binomial.closed_form_det(n, gz if gz is not None else z,
                                                         orientation)
            elif method == "dft":
                report.spectral = binomial.det_spectral(n, z, orientation)
            elif method == "exact":
                row = binomial.binomial_row(n, gz)
                report.exact = circulant.det(row, orientation, circulant.EXACT)
        except OverflowError as exc:
            report.notes[method] = str(exc)
        report.elapsed_us[method] = (time.perf_counter_ns() - t0) // 1000

    if report.closed is not None and report.exact is not None:
        report.agreement["closed_exact"] = {
            "agree": report.closed.value == report.exact, "tolerance": 0.0}
    if report.spectral is not None:
        for name, reference in (("exact", report.exact),
                                ("closed", report.closed.value if report.closed else None)):
            if reference is None:
                continue
            ref = _gauss_to_complex(reference)
            agree = (ref is not None
                     and abs(report.spectral - ref) <= rtol * max(1.0, abs(ref)))
            report.agreement[f"spectral_{name}"] = {"agree": agree, "tolerance": rtol}
    return report


_METHOD_ORDER = ("closed", "dft", "exact")


def resolve_methods(tokens: list[str], z) -> list[str]:
    """Expand/validate requested methods against what this z supports."""
    requested: list[str] = []
    for chunk in tokens:
        requested.extend(t for t in chunk.split(",") if t)
    for t in requested:
        if t not in ("closed", "dft", "exact", "all"):
            raise UsageError(f"unknown method {t!r}; choose from closed, dft, exact, all")
    is_unit = binomial.unit_name(z) is not None
    is_gauss = binomial.as_gaussian(z) is not None
    if "all" in requested:
        methods = ["dft"]
        if is_unit:
            methods.insert(0, "closed")
        if is_gauss:
            methods.append("exact")
        requested = [t for t in requested if t != "all"] + methods
    if "closed" in requested and not is_unit:
        raise UsageError("closed forms exist only for z in {1, -1, i, -i}")
    if "exact" in requested and not is_gauss:
        raise UsageError("the exact method requires a Gaussian-integer z")
    return [m for m in _METHOD_ORDER if m in requested]


def _resolve_rtol(args) -> float:
    if getattr(args, "rtol", None) is not None:
        return args.rtol
    env = os.environ.get(RTOL_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"invalid {RTOL_ENV} value {env!r}") from None
    return DEFAULT_RTOL


def _emit_reports(reports: list[DetReport], fmt: str, out) -> None:
    if fmt == "json":
        payload = [r.to_json_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for r in reports:
            writer.writerow(r.to_csv_row())
    else:
        for r in reports:
            _print_report_text(r, out)


def _print_report_text(r: DetReport, out) -> None:
    out.write(f"n={r.n} z={r.z_text} orientation={r.orientation}\n")
    if r.closed is not None:
        out.write(f"  closed   = {r.closed.value}  (case {r.closed.case}, "
                  f"{r.elapsed_us.get('closed', 0)} us)\n")
    if r.spectral is not None:
        out.write(f"  spectral = {format_scalar(r.spectral)}  "
                  f"({r.elapsed_us.get('dft', 0)} us)\n")
    if r.exact is not None:
        out.write(f"  exact    = {r.exact}  ({r.elapsed_us.get('exact', 0)} us)\n")
    for method, note in r.notes.items():
        out.write(f"  {method}: unavailable ({note})\n")
    for pair, verdict in r.agreement.items():
        status = "agree" if verdict["agree"] else "DISAGREE"
        out.write(f"  {pair}: {status} (tolerance {verdict['tolerance']:g})\n")
    if r.agreement or r.notes:
        out.write(f"  result: {'AGREE' if r.all_agree else 'DISAGREE'}\n")


def cmd_det(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    z = parse_scalar(args.z)
    methods = resolve_methods(args.method, z)
    rtol = _resolve_rtol(args)
    report = compute_report(args.n, z, format_scalar(z), args.orientation, methods, rtol)
    _emit_reports([report], args.format, sys.stdout)
    return EXIT_OK if report.all_agree else EXIT_DISAGREE


def cmd_table(args) -> int:
    if not (1 <= args.n_min <= args.n_max <= 4096):
        raise UsageError("need 1 <= --n-min <= --n-max <= 4096")
    zs = []
    for chunk in args.z.split(","):
        if chunk:
            z = parse_scalar(chunk)
            zs.append((z, format_scalar(z)))
    if not zs:
        raise UsageError("--z must name at least one scalar")
    orientations = [o for o in args.orientation.split(",") if o]
    for o in orientations:
        if o not in (circulant.RIGHT, circulant.LEFT):
            raise UsageError(f"unknown orientation {o!r}")
    rtol = _resolve_rtol(args)
    reports = []
    for n in range(args.n_min, args.n_max + 1):
        for z, z_text in zs:
            for orientation in orientations:
                methods = ["dft"]
                if binomial.unit_name(z) is not None:
                    methods.insert(0, "closed")
                if binomial.as_gaussian(z) is not None and n <= args.exact_max_n:
                    methods.append("exact")
                reports.append(compute_report(n, z, z_text, orientation, methods, rtol))
    _emit_reports(reports, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    rtol = _resolve_rtol(args)
    results = verify_mod.run_all(max_n=args.max_n, seed=args.seed, rtol=rtol)
    total_passed = sum(r.passed for r in results)
    total_failed = sum(r.failed for r in results)
    out = sys.stdout
    if args.format == "json":
        payload = {
            "max_n": args.max_n,
            "seed": args.seed,
            "checks": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                        "ok": r.ok, "details": r.details} for r in results],
            "total_passed": total_passed,
            "total_failed": total_failed,
            "ok": total_failed == 0,
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check", "passed", "failed", "ok"])
        for r in results:
            writer.writerow([r.name, r.passed, r.failed, "true" if r.ok else "false"])
    else:
        for r in results:
            tag = "PASS" if r.ok else "FAIL"
            out.write(f"{tag}  {r.name:<28} passed={r.passed} failed={r.failed}\n")
            for line in r.details:
                out.write(f"      {line}\n")
        out.write(f"summary: {total_passed} passed, {total_failed} failed\n")
    return EXIT_OK if total_failed == 0 else EXIT_DISAGREE


def _bench_once(method: str, n: int) -> float:
    if method == "dft":
        row = binomial.binomial_row(n, 1j)
        t0 = time.perf_counter()
        circulant.det_spectral(row)
        return time.perf_counter() - t0
    row = binomial.binomial_row(n, GaussInt(0, 1))
    t0 = time.perf_counter()
    circulant.bareiss_det(circulant.dense_matrix(row))
    return time.perf_counter() - t0


def cmd_bench(args) -> int:
    if not 1 <= args.max_n <= 4096:
        raise UsageError("--max-n must lie in [1, 4096]")
    methods = []
    for chunk in args.method:
        methods.extend(t for t in chunk.split(",") if t)
    for m in methods:
        if m not in ("dft", "exact"):
            raise UsageError(f"unknown bench method {m!r}; choose dft and/or exact")
    sizes = []
    s = 8
    while s <= args.max_n:
        sizes.append(s)
        s *= 2
    if not sizes:
        sizes = [args.max_n]
    rows = []
    timings: dict[str, dict[int, float]] = {}
    for method in methods:
        cap = _BENCH_DFT_CAP if method == "dft" else _BENCH_EXACT_CAP
        per_method = {}
        for n in sizes:
            if n > cap:
                print(f"bench: skipping {method} at n={n} (cap {cap})", file=sys.stderr)
                continue
            t = statistics.median(_bench_once(method, n) for _ in range(5))
            per_method[n] = t
            rows.append((method, n, int(t * 1e6)))
        timings[method] = per_method
    dft_times = timings.get("dft", {})
    for n, t in sorted(dft_times.items()):
        t2 = dft_times.get(2 * n)
        if t2 is not None and t > 0 and t2 > 8.0 * t:
            print(f"bench: warning: spectral time grew {t2 / t:.1f}x from n={n} "
                  f"to n={2 * n} (soft bound 8x)", file=sys.stderr)
    out = sys.stdout
    if args.format == "json":
        payload = [{"method": m, "n": n, "median_us": us} for m, n, us in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["method", "n", "median_us"])
        for m, n, us in rows:
            writer.writerow([m, n, us])
    else:
        for m, n, us in rows:
            out.write(f"{m:>5}  n={n:<5} median {us} us\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="circdet",
                     description="Determinants of circulant matrices built from "
                                 "binomial-expansion rows: closed forms, spectral "
                                 "products and exact Gaussian-integer elimination.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    det = sub.add_parser("det", help="determinant of one (n, z, orientation) cell")
    det.add_argument("--n", type=int, required=True, help="matrix dimension, n >= 1")
    det.add_argument("--z", required=True,
                     help="scalar literal: 1, -1, i, -i, or a+bi with decimal a, b")
    det.add_argument("--orientation", choices=(circulant.RIGHT, circulant.LEFT),
                     default=circulant.RIGHT)
    det.add_argument("--method", action="append", default=None,
                     help="comma list from closed, dft, exact, all (default all; "
                          "'all' means every method applicable to z)")
    det.add_argument("--rtol", type=float, default=None,
                     help=f"relative tolerance for spectral agreement "
                          f"(default {DEFAULT_RTOL}, or ${RTOL_ENV})")
    det.add_argument("--format", choices=("text", "csv", "json"), default="text")
    det.set_defaults(func=cmd_det)

    table = sub.add_parser("table", help="sweep a range of n, z and orientations")
    table.add_argument("--n-min", type=int, required=True)
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--z", default="1,-1,i,-i", help="comma list of scalar literals")
    table.add_argument("--orientation", default="right,left",
                       help="comma list from right, left")
    table.add_argument("--exact-max-n", type=int, default=128,
                       help="largest n for the exact column (default 128)")
    table.add_argument("--rtol", type=float, default=None)
    table.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    table.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", help="run every invariant sweep")
    ver.add_argument("--max-n", type=int, default=24,
                     help="sweep cap; each check also honors its own stated range")
    ver.add_argument("--seed", type=int, default=42, help="seed for randomized sweeps")
    ver.add_argument("--rtol", type=float, default=None,
                     help="override for the spectral-vs-exact sweep tolerance")
    ver.add_argument("--format", choices=("text", "csv", "json"), default="text")
    ver.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="median-of-5 timings on the z=i family")
    bench.add_argument("--max-n", type=int, default=64,
                       help="largest doubling size (dft capped at "
                            f"{_BENCH_DFT_CAP}, exact at {_BENCH_EXACT_CAP})")
    bench.add_argument("--method", action="append", default=None,
                       help="comma list from dft, exact (default both)")
    bench.add_argument("--format", choices=("text", "csv", "json"), default="text")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "method", None) is None and args.command in ("det", "bench"):
        args.method = ["all"] if args.command == "det" else ["dft,exact"]
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"circdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedZ, DomainMismatch, ValueError) as exc:
        print(f"circdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
