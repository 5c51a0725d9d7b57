"""Command-line front end.

Exit status: 0 success, 1 discrepancy found, 2 usage or resource error.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from . import solver, spectrum, suites
from .decomp import decompose, element_order
from .errors import DomainError, FieldError, ScanLimitError
from .field import MAX_N, make_field
from .solver import BClass

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2
SPECTRUM_CROSSCHECK_MAX_N = 3
BRUTE_SPECTRUM_MAX_N = spectrum.BRUTE_MAX_DEGREE // 4
VERIFY_MAX_N = 4
LISTING_MAX_COUNT = 1 << 20
GLOBAL_DEFAULTS = {"n": None, "modulus": None, "format": "table", "jobs": 1, "seed": 0}


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    n: int
    modulus: int = None
    output_format: str = "table"
    jobs: int = 1
    seed: int = 0
    timing: bool = False

    def field(self):
        return make_field(self.n, self.modulus)


@dataclass
class RunReport:
    command: str
    field: str
    results: dict
    discrepancies: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    csv_header: list = field(default_factory=list)
    csv_rows: list = field(default_factory=list)

    def to_json(self, timing=False):
        doc = {"command": self.command, "field": self.field}
        doc.update(self.results)
        doc["discrepancies"] = list(self.discrepancies)
        if timing:
            doc["elapsed_ms"] = round(self.elapsed_ms, 3)
        return json.dumps(doc, sort_keys=False)


# ---------------------------------------------------------------------------
# config
# ---------------------------------------------------------------------------

def read_config_file(path):
    """key=value lines; '#' starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key = key.strip().lstrip("-").replace("-", "_")
            if key not in GLOBAL_DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def build_config(args):
    merged = dict(GLOBAL_DEFAULTS)
    if args.config:
        merged.update(read_config_file(args.config))
    for key in GLOBAL_DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
    if merged["n"] is None:
        raise UsageError("--n is required (flag or config file)")
    try:
        n = int(merged["n"])
        jobs = int(merged["jobs"])
        seed = int(merged["seed"])
        modulus = merged["modulus"]
        if isinstance(modulus, str):
            modulus = int(modulus, 16)
    except ValueError as exc:
        raise UsageError(f"bad configuration value: {exc}") from None
    if not 1 <= n <= MAX_N:
        raise UsageError(f"--n must lie in [1, {MAX_N}]")
    if jobs < 0:
        raise UsageError("--jobs must be >= 0")
    fmt = merged["format"]
    if fmt not in ("json", "csv", "table"):
        raise UsageError(f"unknown format {fmt!r}")
    return CliConfig(n, modulus, fmt, jobs, seed, bool(getattr(args, "timing", False)))


def _parse_element(ctx, text, what):
    try:
        return ctx.parse(text)
    except FieldError as exc:
        raise UsageError(f"--{what}: {exc}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_spectrum(config, d=None):
    ctx = config.field()
    results = {"m": ctx.m}
    bad = []
    if d is None:
        q = ctx.q
        results["d"] = solver.exponent_d(q)
        hist = spectrum.closed_form_spectrum(ctx)
        crossed = config.n <= SPECTRUM_CROSSCHECK_MAX_N
        if crossed:
            brute = spectrum.brute_spectrum(ctx, hist.d, config.jobs)
            if brute.w != hist.w:
                bad.append(f"closed form {hist.pairs()} != brute force {brute.pairs()}")
        else:
            results["note"] = f"oracle skipped: brute-force cross-check runs only for n <= {SPECTRUM_CROSSCHECK_MAX_N}"
    else:
        if config.n > BRUTE_SPECTRUM_MAX_N:
            raise ScanLimitError(
                f"brute-force spectrum needs 4n <= {spectrum.BRUTE_MAX_DEGREE} (n <= {BRUTE_SPECTRUM_MAX_N})"
            )
        results["d"] = d
        hist = spectrum.brute_spectrum(ctx, d, config.jobs)
        crossed = False
    bad.extend(hist.check())
    results["spectrum"] = [list(p) for p in hist.pairs()]
    results["delta_f"] = hist.delta_f
    results["cross_checked"] = crossed
    return RunReport(
        "spectrum", ctx.spec(), results, bad,
        csv_header=["i", "w_i"], csv_rows=hist.pairs(),
    )


def cmd_solve(config, b_text, method="auto"):
    ctx = config.field()
    b = _parse_element(ctx, b_text, "b")
    cls = solver.classify_b(b)
    predicted = solver.predicted_count(cls, ctx.q)
    brute_ok = config.n <= solver.EXHAUSTIVE_MAX_N
    if method == "brute" and not brute_ok:
        raise ScanLimitError(f"brute-force solving is capped at n <= {solver.EXHAUSTIVE_MAX_N}")
    if predicted > LISTING_MAX_COUNT:
        raise ScanLimitError(f"{predicted} solutions exceed the listing cap {LISTING_MAX_COUNT}")
    if method == "brute" or (method == "auto" and cls is BClass.NONE and brute_ok):
        sols = solver.brute_force_solutions(b)
    else:
        sols = solver.solve_closed(b)
    bad = []
    if len(sols) != predicted:
        bad.append(f"{len(sols)} solutions found, {predicted} predicted")
    hexes = [ctx.fmt(x) for x in sols]
    results = {
        "b": ctx.fmt(b),
        "class": cls.value,
        "predicted_count": predicted,
        "solutions": hexes,
        "method": sols.method.value,
    }
    head = [ctx.fmt(b), cls.value, predicted, sols.method.value]
    rows = [head + [h] for h in hexes] or [head + [""]]
    return RunReport(
        "solve", ctx.spec(), results, bad,
        csv_header=["b", "class", "predicted_count", "method", "solution"], csv_rows=rows,
    )


def cmd_lambda(config, enumerate_=False):
    ctx = config.field()
    size = solver.lambda_size_formula(ctx.q)
    results = {"size": size, "enumerated": enumerate_}
    bad, rows = [], []
    if enumerate_:
        elems = solver.lambda_enumerate(ctx, config.jobs)
        results["scanned_size"] = len(elems)
        results["elements"] = [ctx.fmt(x) for x in elems]
        rows = [[h] for h in results["elements"]]
        if len(elems) != size:
            bad.append(f"scan found {len(elems)} elements, formula gives {size}")
    return RunReport("lambda", ctx.spec(), results, bad, csv_header=["element"], csv_rows=rows)


def cmd_decompose(config, x_text):
    ctx = config.field()
    x = _parse_element(ctx, x_text, "x")
    if not x:
        raise UsageError("--x must be nonzero")
    q = ctx.q
    parts = decompose(x)
    bad = []
    if parts.recompose() != x:
        bad.append("x1*x2*x3 != x")
    orders = [element_order(p) for p in parts]
    for p, s, name in zip(parts, (q - 1, q + 1, q * q + 1), ("x1", "x2", "x3")):
        if (p ** s) != 1:
            bad.append(f"{name} is not in mu_{s}")
    results = {
        "x": ctx.fmt(x),
        "components": [ctx.fmt(p) for p in parts],
        "orders": orders,
        "subgroups": [q - 1, q + 1, q * q + 1],
        "recomposed": ctx.fmt(parts.recompose()),
        "recompose_ok": not bad,
    }
    rows = [[name, ctx.fmt(p), o, s] for name, p, o, s in zip(("x1", "x2", "x3"), parts, orders, results["subgroups"])]
    return RunReport(
        "decompose", ctx.spec(), results, bad,
        csv_header=["component", "value", "order", "subgroup"], csv_rows=rows,
    )


def mutated_closed_form(ctx):
    """The closed-form spectrum with one b moved from w_0 to w_2 (bogus)."""
    h = spectrum.closed_form_spectrum(ctx)
    w = dict(h.w)
    w[0] -= 1
    w[2] = w.get(2, 0) + 1
    return spectrum.SpectrumHistogram(h.m, h.d, w)


def cmd_verify(config, mutate=False, progress=None):
    if config.n > VERIFY_MAX_N:
        raise UsageError(f"verify is capped at n <= {VERIFY_MAX_N} (got n={config.n})")
    ctx = config.field()
    closed = mutated_closed_form(ctx) if mutate else None
    outcome = suites.run_all(ctx, closed, config.jobs, config.seed, progress)
    bad = [f"{name}: {msg}" for name, msgs in outcome for msg in msgs]
    results = {
        "n": config.n,
        "q": ctx.q,
        "mutated": mutate,
        "suites": [{"name": name, "passed": not msgs, "failures": len(msgs)} for name, msgs in outcome],
    }
    rows = [[name, "pass" if not msgs else "fail", len(msgs)] for name, msgs in outcome]
    return RunReport("verify", ctx.spec(), results, bad, csv_header=["suite", "status", "failures"], csv_rows=rows)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render(report, config):
    if config.output_format == "json":
        return report.to_json(config.timing) + "\n"
    if config.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.csv_header)
        writer.writerows(report.csv_rows)
        return buf.getvalue()
    lines = [f"{report.command}  [{report.field}]"]
    for key, value in report.results.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"  {key}:")
            lines.extend(f"    {item}" for item in value)
        else:
            lines.append(f"  {key}: {value}")
    if report.discrepancies:
        lines.append("  DISCREPANCIES:")
        lines.extend(f"    {d}" for d in report.discrepancies)
    else:
        lines.append("  status: ok")
    if config.timing:
        lines.append(f"  elapsed: {report.elapsed_ms:.1f} ms")
    return "\n".join(lines) + "\n"


def _global_flags():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--n", type=int, help="q = 2^n, field GF(2^(4n)); 1 <= n <= 15")
    g.add_argument("--modulus", help="hex irreducible modulus of degree 4n (MSB first)")
    g.add_argument("--format", choices=["json", "csv", "table"], help="output format (default table)")
    g.add_argument("--jobs", type=int, help="worker processes, 0 = one per CPU (default 1)")
    g.add_argument("--seed", type=int, help="seed for randomized spot checks (default 0)")
    g.add_argument("--config", help="key=value file providing defaults for the options above")
    g.add_argument("--timing", action="store_true", help="report elapsed time")
    return p


def build_parser():
    common = _global_flags()
    parser = argparse.ArgumentParser(
        prog="gf2diff",
        description="Differential analysis of x^(q^3+q^2+q-1) over F_(q^4), q = 2^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="differential spectrum")
    p.add_argument("--d", type=int, help="exponent for a brute-force spectrum (default: closed form)")

    p = sub.add_parser("solve", parents=[common], help="solve x^d + (x+1)^d = b")
    p.add_argument("--b", required=True, help="right-hand side as hex")
    p.add_argument("--method", choices=["auto", "brute", "constructive"], default="auto")

    p = sub.add_parser("lambda", parents=[common], help="size (and elements) of Lambda")
    p.add_argument("--enumerate", action="store_true", help="scan the field (n <= 4)")

    p = sub.add_parser("decompose", parents=[common], help="x = x1*x2*x3 factorization")
    p.add_argument("--x", required=True, help="nonzero element as hex")

    p = sub.add_parser("verify", parents=[common], help="run every exhaustive check (n <= 4)")
    p.add_argument("--mutate-closed-form", action="store_true",
                   help="check against a deliberately wrong closed form; must exit 1")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        config = build_config(args)
        if args.command == "spectrum":
            report = cmd_spectrum(config, args.d)
        elif args.command == "solve":
            report = cmd_solve(config, args.b, args.method)
        elif args.command == "lambda":
            report = cmd_lambda(config, args.enumerate)
        elif args.command == "decompose":
            report = cmd_decompose(config, args.x)
        else:
            progress = None
            if config.n >= VERIFY_MAX_N:
                progress = lambda name: print(f"[verify] running {name}", file=stderr, flush=True)  # noqa: E731
            report = cmd_verify(config, args.mutate_closed_form, progress)
    except (UsageError, FieldError, DomainError, ScanLimitError) as exc:
        print(f"gf2diff {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    stdout.write(render(report, config))
    if report.discrepancies and config.output_format != "table":
        for d in report.discrepancies:
            print(f"discrepancy: {d}", file=stderr)
    return EXIT_DISCREPANCY if report.discrepancies else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
