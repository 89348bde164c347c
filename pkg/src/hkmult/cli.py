"""``hk``: evaluate bounds and closed forms, estimate colengths, replay reference values.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 capacity.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, bounds, closedforms, golden
from .arith import format_rat, parse_rat, to_decimal
from .errors import CapacityError, HKError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, HKError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _q_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _row(label: str, value, anchor: str = "", **extra) -> dict:
    return {"label": label, "exact": format_rat(value), "value": Fraction(value), "anchor": anchor, **extra}


class Output:
    def __init__(self, args, out):
        self.json = args.json
        self.digits = args.digits
        self.out = out

    def dec(self, x) -> str:
        return to_decimal(x, self.digits)

    def rows(self, command: str, rows: list[dict], extra: Optional[dict] = None):
        if self.json:
            payload = {
                "command": command,
                "results": [
                    {k: v for k, v in r.items() if k != "value"} | {"decimal": self.dec(r["value"])}
                    for r in rows
                ],
            }
            payload.update(extra or {})
            self.out.write(json.dumps(payload, indent=2) + "\n")
            return
        self.out.write(f"# hk {__version__}: {command}\n")
        for r in rows:
            line = f"{r['label']}: {r['exact']} ~ {self.dec(r['value'])}"
            if r.get("anchor"):
                line += f"    [{r['anchor']}]"
            self.out.write(line + "\n")
            if r.get("note"):
                self.out.write(f"  note: {r['note']}\n")


def _report_row(label: str, rep: bounds.BoundReport) -> dict:
    params = ", ".join(
        f"{k}={format_rat(v) if isinstance(v, Fraction) else v}" for k, v in rep.parameters.items()
    )
    row = _row(f"{label} ({params})", rep.value, rep.anchor, method=rep.method.value)
    if rep.note:
        row["note"] = rep.note
    return row


def cmd_bound(args, out: Output) -> int:
    kind = args.bound_kind
    if kind == "key":
        if args.s is None:
            s, value = bounds.optimize_key_bound(args.e, args.d, args.r, args.limit)
            rep = bounds.BoundReport(value, bounds.Method.KEY_OPTIMIZED,
                                     {"e": args.e, "d": args.d, "r": max(args.r, 0), "s": s, "limit": args.limit})
        else:
            rep = bounds.BoundReport(bounds.key_lower_bound(args.e, args.d, args.r, args.s), bounds.Method.KEY,
                                     {"e": args.e, "d": args.d, "r": max(args.r, 0), "s": args.s})
    elif kind == "weights":
        rep = bounds.hypersurface_weight_bound(args.a, args.b, args.c)
    elif kind == "classify3d":
        rep = bounds.classify_3d(args.e, not args.not_f_rational)
    elif kind == "classify4d":
        rep = bounds.classify_4d(args.e)
    else:
        rep = bounds.BoundReport(bounds.beta_hypersurface_bound(args.e, args.d), bounds.Method.BETA_HYP,
                                 {"e": args.e, "d": args.d})
    if out.json:
        out.out.write(json.dumps({"command": f"bound {kind}", **rep.to_json()}, indent=2) + "\n")
    else:
        out.rows(f"bound {kind}", [_report_row("e_HK >=", rep)])
    return EXIT_OK


def cmd_closed_form(args, out: Output) -> int:
    kind = args.form_kind
    if kind == "veronese":
        rows = [_row(f"Veronese d={args.d} r={args.r}", closedforms.veronese_hk(args.d, args.r), "C(d+r-1, d)/r")]
    elif kind == "quadric":
        rows = [_row(f"quadric d={args.d} p={args.p}", closedforms.quadric_hk(args.d, args.p))]
    elif kind == "scroll":
        rows = [_row(f"scroll n={args.n}", closedforms.scroll_hk(args.n), "(n+2)(1/2 + 1/(6(n+1)))")]
    elif kind == "zigzag":
        table = closedforms.zigzag(args.d)
        rows = [_row(f"c_{i}", v) for i, v in enumerate(table.values)]
    else:
        rows = [_row(f"limit d={args.d}", closedforms.monsky_limit(args.d), "1 + c_d/d!")]
    out.rows(f"closed-form {kind}", rows)
    return EXIT_OK


def cmd_estimate(args, out: Output) -> int:
    from .frobenius import Limits, hk_estimate, parse_ring_spec

    text = args.spec
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    spec = parse_ring_spec(text)
    seq = hk_estimate(spec, args.q, Limits(max_monomials=args.max_monomials))
    if args.csv is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "length", "ratio_exact", "ratio_decimal"])
        for (q, n), r in zip(seq.points, seq.ratios):
            writer.writerow([q, n, format_rat(r), out.dec(r)])
        if args.csv == "-":
            out.out.write(buf.getvalue())
            return EXIT_OK
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    rows = [
        _row(f"q={q} length={n} ratio", r, q=q, length=n)
        for (q, n), r in zip(seq.points, seq.ratios)
    ]
    rows.append(_row("estimate", seq.estimate, "least squares a*q^d + b*q^(d-1), last 3 points"))
    out.rows(f"estimate {spec}", rows, {"dim": seq.dim})
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    results = golden.run_checks()
    failed = [r for r in results if not r.ok]
    if out.json:
        out.out.write(json.dumps([r.to_json() for r in results], indent=2) + "\n")
    else:
        out.out.write(f"# hk {__version__}: verify paper-tables\n")
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} [{r.group}] {r.label}: {r.computed}"
            if not r.ok:
                line += f" (expected {r.expected})" if not r.error else f" (error: {r.error})"
            out.out.write(line + "\n")
        out.out.write(f"{len(results) - len(failed)}/{len(results)} passed\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="significant digits for decimals (default 6)")

    parser = _Parser(prog="hk", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"hk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bound = sub.add_parser("bound", help="lower bounds for e_HK", parents=[common])
    bsub = bound.add_subparsers(dest="bound_kind", required=True, parser_class=_Parser)
    p = bsub.add_parser("key", parents=[common], help="e*(v_s - r(s-1)^d/d!); optimized over s if --s is omitted")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=_rat)
    p.add_argument("--limit", type=int, default=64, help="denominator limit when optimizing s")
    p = bsub.add_parser("weights", parents=[common], help="X^2 - phi with weights 1/a, 1/b, 1/c")
    for name in ("--a", "--b", "--c"):
        p.add_argument(name, type=int, required=True)
    p = bsub.add_parser("classify3d", parents=[common])
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--not-f-rational", action="store_true")
    p = bsub.add_parser("classify4d", parents=[common])
    p.add_argument("--e", type=int, required=True)
    p = bsub.add_parser("beta", parents=[common], help="hypersurface bound beta_{d+1} * e")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    cf = sub.add_parser("closed-form", help="known exact values", parents=[common])
    csub = cf.add_subparsers(dest="form_kind", required=True, parser_class=_Parser)
    p = csub.add_parser("veronese", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = csub.add_parser("quadric", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = csub.add_parser("scroll", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p = csub.add_parser("zigzag", parents=[common])
    p.add_argument("--d", type=int, required=True, help="largest index")
    p = csub.add_parser("limit", parents=[common], help="1 + c_d/d!")
    p.add_argument("--d", type=int, required=True)

    est = sub.add_parser("estimate", help="exact colengths along a q ladder", parents=[common])
    est.add_argument("--spec", required=True, help="ring spec text, or @file")
    est.add_argument("--q", type=_q_list, required=True, help="comma-separated q values")
    est.add_argument("--csv", nargs="?", const="-", metavar="PATH",
                     help="write q,length,ratio_exact,ratio_decimal (stdout when PATH is omitted)")
    est.add_argument("--max-monomials", type=int, default=2_000_000)

    ver = sub.add_parser("verify", help="replay reference values", parents=[common])
    vsub = ver.add_subparsers(dest="verify_kind", required=True, parser_class=_Parser)
    vsub.add_parser("paper-tables", parents=[common])
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.digits = getattr(args, "digits", 6)
    if args.digits < 1:
        err.write("hk: --digits must be at least 1\n")
        return EXIT_USAGE
    handlers = {"bound": cmd_bound, "closed-form": cmd_closed_form, "estimate": cmd_estimate, "verify": cmd_verify}
    try:
        return handlers[args.command](args, Output(args, out))
    except CapacityError as exc:
        err.write(f"hk: capacity exceeded: {exc}\n")
        return EXIT_CAPACITY
    except (HKError, OSError) as exc:
        err.write(f"hk: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
