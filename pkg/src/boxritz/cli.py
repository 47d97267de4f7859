"""Command-line front end: ``boxritz {standard,projected,weighted,verify,demo-cs}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Optional, Sequence

from . import verify as suite
from .analysis import ConvergenceTable, build_table, cauchy_schwarz_demo
from .assembly import ModelSpec
from .geneig import SolverError
from .trigmoments import DEFAULT_DIGITS, MIN_DIGITS, PrecisionContext, to_fraction

DEFAULT_RANGES = {
    "standard": (4, 20),
    1: (1, 6),
    2: (2, 10),
    3: (3, 13),
    "weighted": (4, 14),
}


class UsageError(Exception):
    pass


def exact_decimal(x) -> Decimal:
    """Exact decimal expansion of a binary BigReal."""
    q = to_fraction(x)
    den = q.denominator
    shift = den.bit_length() - 1  # denominator is a power of two
    return Decimal(q.numerator * 5**shift).scaleb(-shift)


def round_sig(x, digits: int) -> Decimal:
    return Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(exact_decimal(x))


def format_sig(x, digits: int) -> str:
    d = round_sig(x, digits)
    if d.is_zero():
        return "0"
    return format(d, "f")


def full_digits(x, ctx: PrecisionContext) -> str:
    return ctx.mp.nstr(x, ctx.decimal_digits, strip_zeros=False)


def _header(table: ConvergenceTable) -> list[str]:
    return ["N"] + [f"W{k}" for k in range(1, table.levels_shown + 1)] + ["null_count"]


def render_csv(table: ConvergenceTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_header(table))
    for row in table.rows:
        cells = [format_sig(w, table.digits_shown) for w in row.values]
        cells += [""] * (table.levels_shown - len(cells))
        writer.writerow([row.n, *cells, row.null_count])
    return buf.getvalue()


def render_text(table: ConvergenceTable) -> str:
    projector = table.model.is_projector
    head = ["N"] + [f"W{k}" for k in range(1, table.levels_shown + 1)]
    if projector:
        head.append(f"W_k,k>{table.model.d}")
    lines = []
    for row in table.rows:
        cells = [str(row.n)] + [format_sig(w, table.digits_shown) for w in row.values]
        cells += [""] * (table.levels_shown + 1 - len(cells))
        if projector:
            cells.append("0" if row.null_count else "")
        lines.append(cells)
    widths = [max(len(c) for c in col) for col in zip(head, *lines)]
    out = [f"# {table.model.label()}, {table.precision} working digits"]
    out.append("  ".join(h.rjust(w) for h, w in zip(head, widths)))
    for cells in lines:
        out.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
    return "\n".join(out) + "\n"


def render_json(table: ConvergenceTable, ctx: PrecisionContext) -> dict:
    rows = []
    for row in table.rows:
        values = [
            {"display": format_sig(w, table.digits_shown), "full": full_digits(w, ctx), "null": False}
            for w in row.values
        ]
        nulls = []
        if row.spectrum is not None:
            res = row.spectrum
            nulls = [
                {"display": 0.0, "full": full_digits(res.eigenvalues[j], ctx), "null": True}
                for j in range(res.n)
                if res.null_flags[j]
            ]
        rows.append({"N": row.n, "values": values, "nulls": nulls, "null_count": row.null_count})
    return {
        "model": table.model.label(),
        "precision": table.precision,
        "digits": table.digits_shown,
        "levels": table.levels_shown,
        "rows": rows,
    }


def render(tables: Sequence[ConvergenceTable], fmt: str, ctx: PrecisionContext) -> str:
    if fmt == "csv":
        return "\n".join(render_csv(t) for t in tables)
    if fmt == "json":
        payload = [render_json(t, ctx) for t in tables]
        return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n"
    return "\n".join(render_text(t) for t in tables)


def parse_alphas(text: str) -> list[Fraction]:
    try:
        return [Fraction(a.strip()) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --alphas value {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-min", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--d", type=int, help="projection rank")
    common.add_argument("--alphas", help="comma-separated weights, parsed exactly")
    common.add_argument("--levels", type=int)
    common.add_argument("--precision", type=int, default=DEFAULT_DIGITS, help="working decimal digits")
    common.add_argument("--digits", type=int, default=10, help="displayed significant digits")
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--output", help="write to this path instead of stdout")
    common.add_argument("--level", type=int, help="demo-cs: the level n kept in the trial state")

    parser = argparse.ArgumentParser(
        prog="boxritz",
        description="Rayleigh-Ritz eigenvalues for the particle in a box and its projected Hamiltonians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("standard", parents=[common], help="kinetic Hamiltonian, upper bounds")
    sub.add_parser("projected", parents=[common], help="projector onto the lowest d box states")
    sub.add_parser("weighted", parents=[common], help="projector with arbitrary weights")
    sub.add_parser("verify", parents=[common], help="table regressions and invariant suite")
    sub.add_parser("demo-cs", parents=[common], help="constrained trial states vs E_n")
    return parser


def _range(args, key) -> tuple[int, int]:
    lo, hi = DEFAULT_RANGES.get(key, (None, None))
    if lo is None:
        lo, hi = args.d, args.d + 10
    n_min = args.n_min if args.n_min is not None else lo
    n_max = args.n_max if args.n_max is not None else hi
    if n_min < 1 or n_max < n_min:
        raise UsageError(f"need 1 <= --n-min <= --n-max, got {n_min}, {n_max}")
    return n_min, n_max


def _tables(args, ctx: PrecisionContext) -> list[ConvergenceTable]:
    if args.command == "standard":
        n_min, n_max = _range(args, "standard")
        levels = args.levels or min(4, n_min)
        if levels > n_min:
            raise UsageError(f"--levels {levels} exceeds --n-min {n_min}")
        return [build_table(ModelSpec.standard(), n_min, n_max, levels, ctx, args.digits)]
    if args.command == "projected":
        ds = [args.d] if args.d is not None else [1, 2, 3]
        out = []
        for d in ds:
            if d < 1:
                raise UsageError("--d must be >= 1")
            n_min, n_max = _range(args, d)
            out.append(build_table(ModelSpec.projected(d), n_min, n_max, args.levels or d, ctx, args.digits))
        return out
    alphas = parse_alphas(args.alphas) if args.alphas else [Fraction(1), Fraction(2), Fraction(3)]
    if not alphas:
        raise UsageError("--alphas is empty")
    if args.d is not None and args.d != len(alphas):
        raise UsageError(f"--d {args.d} does not match {len(alphas)} weights")
    spec = ModelSpec.weighted(alphas)
    if args.alphas:
        lo, hi = (len(alphas), len(alphas) + 10)
        n_min = args.n_min if args.n_min is not None else lo
        n_max = args.n_max if args.n_max is not None else hi
    else:
        n_min, n_max = _range(args, "weighted")
    if n_min < 1 or n_max < n_min:
        raise UsageError(f"need 1 <= --n-min <= --n-max, got {n_min}, {n_max}")
    return [build_table(spec, n_min, n_max, args.levels or len(alphas), ctx, args.digits)]


def _demo(args, ctx: PrecisionContext) -> str:
    mp = ctx.mp
    ds = [args.d] if args.d is not None else [1, 2, 3]
    lines = ["n  d   N  quotient  E_n  E_n-quotient"]
    for d in ds:
        levels = [args.level] if args.level is not None else list(range(1, d + 1))
        for n in levels:
            if not 1 <= n <= d:
                raise UsageError(f"need 1 <= --level <= --d, got {n}, {d}")
            lo = args.n_min if args.n_min is not None else d
            hi = args.n_max if args.n_max is not None else 13
            for size in range(max(lo, d), hi + 1):
                rec = cauchy_schwarz_demo(n, d, size, ctx)
                lines.append(
                    f"{n}  {d}  {size:2d}  {format_sig(rec.quotient, args.digits)}  "
                    f"{format_sig(rec.bound, args.digits)}  {mp.nstr(rec.bound - rec.quotient, 3)}"
                )
    return "\n".join(lines) + "\n"


def _verify(ctx: PrecisionContext, emit) -> int:
    results = list(suite.run_all(ctx, progress=emit))
    passed = sum(r.passed for r in results)
    for r in results:
        for f in r.failures[:10]:
            emit(f"    {r.name}: {f}")
        if len(r.failures) > 10:
            emit(f"    ... {len(r.failures) - 10} more")
    emit(f"{passed}/{len(results)} suites passed")
    return 0 if passed == len(results) else 1


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.precision < MIN_DIGITS:
            raise UsageError(f"--precision must be >= {MIN_DIGITS}")
        if args.digits < 1:
            raise UsageError("--digits must be >= 1")
        ctx = PrecisionContext(args.precision)
        if args.command == "verify":
            lines: list[str] = []
            status = _verify(ctx, lines.append)
            text = "\n".join(lines) + "\n"
        elif args.command == "demo-cs":
            status, text = 0, _demo(args, ctx)
        else:
            status, text = 0, render(_tables(args, ctx), args.format, ctx)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"boxritz: error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"boxritz: {exc.diagnostic()}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
