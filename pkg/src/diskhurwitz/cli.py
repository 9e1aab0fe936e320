"""Command-line front end: ``diskhurwitz {eval,table,check,report}``.

Exit codes: 0 success, 1 failed check or IO error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .classical import cut_and_join_check
from .correlators import SimpleKind, contraction_step
from .engine import CacheMismatch, HurwitzEngine, write_atomic
from .monomial import INDEX, TWICE_INDEX, Convention, ParseError, enumerate_up_to, format_monomial, parse_monomial
from .reports import literal_rule_diff, route_commutation_report
from .series import Bounds, build_operator, from_engine, residual

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt_text(x: Fraction) -> str:
    return str(x)


def fmt_machine(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


# -- output -------------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(Path(out), text)


def _csv(header: list[str], rows: list[list], preamble: str | None = None) -> str:
    buf = io.StringIO()
    if preamble:
        buf.write(preamble + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _engine(args) -> HurwitzEngine:
    engine = HurwitzEngine(Convention.from_name(args.dot_weight))
    if args.cache and Path(args.cache).exists():
        engine.load_cache(args.cache)
    return engine


def _save(engine: HurwitzEngine, args) -> None:
    if args.cache:
        engine.save_cache(args.cache)


# -- eval ---------------------------------------------------------------------

def cmd_eval(args) -> int:
    refined = args.acute is not None or args.grave is not None
    if refined and args.points is not None:
        raise UsageError("give either --points or --acute/--grave, not both")
    if not refined and args.points is None:
        raise UsageError("one of --points or --acute/--grave is required")
    if args.b is None:
        raise UsageError("--b is required")
    b = parse_monomial(args.b)
    if min(args.m, args.points or 0, args.acute or 0, args.grave or 0) < 0:
        raise UsageError("counts must be >= 0")
    engine = _engine(args)
    fmt = args.format or "text"
    if refined:
        a, g = args.acute or 0, args.grave or 0
        splits = [(a, g)]
        points = a + g
    else:
        points = args.points
        splits = [(a, points - a) for a in range(points + 1)]
    values = {s: engine.refined(args.m, *s, b) for s in splits}
    total = sum((v.total for v in values.values()), Fraction(0))
    _save(engine, args)

    if fmt == "json":
        record = {"m": args.m, "points": points, "b": format_monomial(b), "value": fmt_machine(total)}
        if refined:
            r = values[splits[0]]
            record.update(acute=splits[0][0], grave=splits[0][1],
                          h_acute=fmt_machine(r.h_acute), h_grave=fmt_machine(r.h_grave))
        text = json.dumps(record) + "\n"
    elif fmt == "csv":
        rows = [[args.m, a, g, format_monomial(b), v.total.numerator, v.total.denominator]
                for (a, g), v in values.items()]
        text = _csv(["m", "acute", "grave", "b", "num", "den"], rows)
    else:
        text = fmt_text(total) + "\n"
        if refined:
            r = values[splits[0]]
            text += f"acute: {fmt_text(r.h_acute)}\ngrave: {fmt_text(r.h_grave)}\n"
    _emit(text, args.out)
    return EXIT_OK


# -- table --------------------------------------------------------------------

def table_rows(engine: HurwitzEngine, max_degree: int, max_points: int) -> list[tuple]:
    rows = []
    for n in range(max_points + 1):
        for m in range(n + 1):
            for a in range(n - m + 1):
                g = n - m - a
                for b in enumerate_up_to(max_degree):
                    rows.append((m, a, g, b, engine.value(m, a, g, b)))
    return rows


def cmd_table(args) -> int:
    if args.max_degree < 0 or args.max_points < 0:
        raise UsageError("bounds must be >= 0")
    engine = _engine(args)
    engine.warm(args.max_degree, args.max_points, threads=args.threads)
    rows = table_rows(engine, args.max_degree, args.max_points)
    _save(engine, args)
    fmt = args.format or "csv"
    header = f"dot_weight={engine.conv.name} max_degree={args.max_degree} max_points={args.max_points}"
    if fmt == "json":
        text = json.dumps({
            "dot_weight": engine.conv.name, "max_degree": args.max_degree, "max_points": args.max_points,
            "rows": [{"m": m, "acute": a, "grave": g, "points": a + g, "b": format_monomial(b),
                      "value": fmt_machine(v)} for m, a, g, b, v in rows],
        }, indent=1) + "\n"
    elif fmt == "csv":
        text = _csv(["m", "acute", "grave", "b", "num", "den"],
                    [[m, a, g, format_monomial(b), v.numerator, v.denominator] for m, a, g, b, v in rows],
                    preamble="# " + header)
    else:
        lines = ["# " + header]
        lines += [f"{m}\t{a}\t{g}\t{format_monomial(b)}\t{fmt_text(v)}" for m, a, g, b, v in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# -- check --------------------------------------------------------------------

def check_oracle(args) -> str | None:
    for conv in (INDEX, TWICE_INDEX):
        fast = HurwitzEngine(conv, method="moves")
        for n in range(1, 4):
            for m in range(n + 1):
                for a in range(n - m + 1):
                    g = n - m - a
                    for b in enumerate_up_to(5):
                        kinds = []
                        if a == g == 0:
                            kinds.append((SimpleKind.INTERIOR, (m - 1, 0, 0)))
                        else:
                            if a:
                                kinds.append((SimpleKind.ACUTE, (m, a - 1, g)))
                            if g:
                                kinds.append((SimpleKind.GRAVE, (m, a, g - 1)))
                        slow = Fraction(0)
                        for kind, prev in kinds:
                            layer = fast.layer(*prev, b.degree)
                            slow += contraction_step(layer, kind, b, conv)
                        got = fast.value(m, a, g, b)
                        if got != slow:
                            return (f"{conv.name} h({m},{a},{g},{format_monomial(b)}): "
                                    f"moves {got} != contraction {slow}")
    return None


def check_pde(args) -> str | None:
    conv = Convention.from_name(args.dot_weight)
    bounds = Bounds(2, 2, 2, 6)
    series = from_engine(bounds, conv=conv)
    for which in ("beta", "gamma", "alpha"):
        res = residual(which, series, build_operator(which, 6, conv))
        if res:
            (m, a, g, b), v = min(res.items(), key=lambda kv: (kv[0][:3], kv[0][3].sort_key()))
            return f"residual {which} at ({m},{a},{g},{format_monomial(b)}) = {v}"
    return None


def check_classical(args) -> str | None:
    bad = cut_and_join_check(5, 6)
    if bad:
        row = bad[0]
        return f"<{tuple(row['partition'])}>^{row['m']}: evolved {row['evolved']} != brute force {row['bruteforce']}"
    return None


def check_symmetry(args) -> str | None:
    index, twice = HurwitzEngine(INDEX), HurwitzEngine(TWICE_INDEX)
    for engine in (index, twice):
        for n in range(4):
            for m in range(n + 1):
                for a in range(n - m + 1):
                    g = n - m - a
                    for b in enumerate_up_to(5):
                        x = engine.refined(m, a, g, b).h_acute
                        y = engine.refined(m, g, a, b.star()).h_grave
                        if x != y:
                            return (f"{engine.conv.name} h_acute({m},{a},{g},{format_monomial(b)}) = {x} "
                                    f"!= h_grave({m},{g},{a},{format_monomial(b.star())}) = {y}")
                for b in enumerate_up_to(5):
                    x, y = engine.total(m, n - m, b), engine.total(m, n - m, b.star())
                    if x != y:
                        return (f"{engine.conv.name} h({m},{n - m},{format_monomial(b)}) = {x} "
                                f"!= h({m},{n - m},{format_monomial(b.star())}) = {y}")
    for n in range(4):
        for m in range(n + 1):
            for a in range(n - m + 1):
                for b in enumerate_up_to(5):
                    lhs, rhs = index.value(m, a, n - m - a, b), twice.value(m, a, n - m - a, b)
                    for gen in b:
                        if gen.family.letter == "D":
                            lhs *= gen.index
                            rhs *= 2 * gen.index
                    if lhs != rhs:
                        return f"covariance fails at ({m},{a},{n - m - a},{format_monomial(b)})"
    return None


CHECKS: dict[str, Callable] = {
    "oracle": check_oracle,
    "pde": check_pde,
    "classical": check_classical,
    "symmetry": check_symmetry,
}


def cmd_check(args) -> int:
    failure = CHECKS[args.suite](args)
    if failure:
        print(f"FAIL {args.suite}: {failure}")
        return EXIT_FAIL
    print(f"PASS {args.suite}")
    return EXIT_OK


# -- report -------------------------------------------------------------------

def cmd_report(args) -> int:
    conv = Convention.from_name(args.dot_weight)
    max_degree = 4 if args.max_degree is None else args.max_degree
    if args.kind == "consistency":
        data = literal_rule_diff(max_degree, 2 if args.max_points is None else args.max_points, conv)
    else:
        data = {"dot_weight": conv.name, "max_degree": max_degree,
                "differences": route_commutation_report(
                    max_degree, 3 if args.max_points is None else args.max_points, conv)}
    fmt = args.format or "json"
    if fmt == "csv":
        raise UsageError("reports are written as json or text")
    if fmt == "json":
        text = json.dumps(data, indent=1) + "\n"
    else:
        text = _report_text(data)
    _emit(text, args.out)
    return EXIT_OK


def _plain(v):
    # text output writes integers without a denominator
    if isinstance(v, str) and v.endswith("/1") and v[:-2].lstrip("-").isdigit():
        return v[:-2]
    return v


def _report_text(data: dict) -> str:
    lines = [f"{k}: {v}" for k, v in data.items() if not isinstance(v, (list, dict))]
    for key, value in data.items():
        sections = value.items() if isinstance(value, dict) else [(key, value)] if isinstance(value, list) else []
        for name, rows in sections:
            lines.append(f"[{name}] {len(rows)} entries")
            lines += ["  " + " ".join(f"{k}={_plain(v)}" for k, v in row.items()) for row in rows]
    return "\n".join(lines) + "\n"


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dot-weight", choices=["index", "twice-index"], default="index")
    common.add_argument("--format", choices=["json", "csv", "text"])
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--cache", metavar="PATH")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="diskhurwitz", description="Exact disk single Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one number")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--points", type=int)
    p.add_argument("--acute", type=int)
    p.add_argument("--grave", type=int)
    p.add_argument("--b")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="tabulate all numbers within bounds")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-points", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(CHECKS))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", parents=[common], help="printed-table or route comparison")
    p.add_argument("kind", choices=["consistency", "routes"])
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-points", type=int)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"diskhurwitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, CacheMismatch) as exc:
        print(f"diskhurwitz: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
