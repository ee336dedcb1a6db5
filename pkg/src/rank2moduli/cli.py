"""Command-line front end.

Usage:
    rank2moduli table -g 3 --p-min -3 --p-max 3 --q-min -3 --q-max 3
    rank2moduli intersections -g 4 --format json
    rank2moduli dims -g 2 --levels 0..2
    rank2moduli chern -g 3
    rank2moduli check -g 2 --g-max 8 --suite all

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import characteristic as chc
from .checks import SUITES, run_checks
from .cohomology import (
    CohClass,
    GenusContext,
    format_class,
    gamma_reduce,
    i_series,
    intersection_number,
    is_zero_in_cohomology,
    monomials_of_weight,
)
from .numeric import named_series
from .verlinde import (
    Audit,
    build_table,
    twisted_dim,
    untwisted_dim_pairing,
    untwisted_dim_trig,
    v_trig,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt_rational(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def json_rational(r):
    r = Fraction(r)
    return r.numerator if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_range(text: str) -> range:
    """``"3"``, ``"0..2"`` or ``"0:2"`` (inclusive) to a range."""
    for sep in ("..", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            lo, hi = int(lo), int(hi)
            break
    else:
        lo = hi = int(text)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _audit_csv(audits: list[Audit]) -> str:
    return _csv(["audit", "pass", "detail"], [[a.name, "PASS" if a.passed else "FAIL", a.detail] for a in audits])


def _json(command: str, genus, results, audits: list[Audit]) -> str:
    payload = {
        "command": command,
        "genus": genus,
        "results": results,
        "audits": [a.as_dict() for a in audits],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _latex_tabular(corner: str, row_labels, col_labels, cell) -> str:
    lines = [
        "\\begin{tabular}{r|" + "r" * len(col_labels) + "}",
        corner + " & " + " & ".join(str(c) for c in col_labels) + " \\\\",
        "\\hline",
    ]
    for r in row_labels:
        lines.append(f"{r} & " + " & ".join(cell(r, c) for c in col_labels) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _text_grid(row_labels, col_labels, cell) -> str:
    cells = {(r, c): cell(r, c) for r in row_labels for c in col_labels}
    corner = "p\\q"
    width = max(len(str(x)) for x in [*cells.values(), *row_labels, *col_labels, corner])
    lines = [f"{corner:>{width}} | " + " ".join(f"{c:>{width}}" for c in col_labels)]
    lines.append("-" * len(lines[0]))
    lines += [f"{r:>{width}} | " + " ".join(f"{cells[r, c]:>{width}}" for c in col_labels) for r in row_labels]
    return "\n".join(lines) + "\n"


def _latex_audits(audits: list[Audit]) -> str:
    return "".join(f"% audit {a.name}: {'PASS' if a.passed else 'FAIL'} ({a.detail})\n" for a in audits)


def cmd_table(args) -> tuple[str, bool]:
    ctx = GenusContext(args.genus, args.precision)
    prange = range(args.p_min, args.p_max + 1)
    qrange = range(args.q_min, args.q_max + 1)
    table = build_table(ctx, prange, qrange)
    fmt = args.format or "csv"
    if fmt == "json":
        cells = [{"p": p, "q": q, "V": json_rational(v)} for p, q, v in table.cells()]
        out = _json("table", args.genus, cells, table.audits)
    elif fmt == "latex":
        out = _latex_tabular("$p \\backslash q$", list(prange), list(qrange), lambda p, q: fmt_rational(table[p, q]))
        out += _latex_audits(table.audits)
    elif fmt == "text":
        out = _text_grid(list(prange), list(qrange), lambda p, q: fmt_rational(table[p, q]))
        out += "".join(f"{'PASS' if a.passed else 'FAIL'}  {a.name}\n" for a in table.audits)
    else:
        out = _csv(["p", "q", "value"], [[p, q, fmt_rational(v)] for p, q, v in table.cells()])
        out += "\n" + _audit_csv(table.audits)
    return out, table.passed


def cmd_intersections(args) -> tuple[str, bool]:
    ctx = GenusContext(args.genus, args.precision)
    rows, audits = [], []
    gamma_ok = True
    integral = True
    for mono in sorted(monomials_of_weight(ctx.top_weight), reverse=True):
        value = intersection_number(ctx, *mono)
        integral &= value.denominator == 1
        reduced = gamma_reduce(ctx, *mono) if mono.p >= 1 else None
        if reduced is not None:
            gamma_ok &= reduced == value
        rows.append((mono, value, reduced))
    closed = named_series("t_over_sinh_t", 2 * ctx.g - 2) * Fraction(-4) ** (ctx.g - 1)
    audits.append(Audit("integrality", integral, "ok" if integral else "non-integer pairing"))
    audits.append(Audit("gamma reduction", gamma_ok, "ok" if gamma_ok else "mismatch"))
    thm = i_series(ctx).coeffs == closed.coeffs
    audits.append(Audit("I(t) = (-4)^(g-1) t/sinh t", thm, "ok" if thm else "coefficient mismatch"))

    fmt = args.format or "csv"
    if fmt == "json":
        results = [
            {"m": m.m, "n": m.n, "p": m.p, "value": json_rational(v),
             "gamma_reduced": None if r is None else json_rational(r)}
            for m, v, r in rows
        ]
        out = _json("intersections", args.genus, results, audits)
    elif fmt == "latex":
        lines = ["\\begin{tabular}{rrr|r}", "$m$ & $n$ & $p$ & $\\langle\\alpha^m\\beta^n\\gamma^p\\rangle$ \\\\", "\\hline"]
        lines += [f"{m.m} & {m.n} & {m.p} & {fmt_rational(v)} \\\\" for m, v, _ in rows]
        lines.append("\\end{tabular}")
        out = "\n".join(lines) + "\n" + _latex_audits(audits)
    else:
        body = [[m.m, m.n, m.p, fmt_rational(v), "" if r is None else fmt_rational(r)] for m, v, r in rows]
        out = _csv(["m", "n", "p", "value", "gamma_reduced"], body) + "\n" + _audit_csv(audits)
    return out, all(a.passed for a in audits)


def cmd_dims(args) -> tuple[str, bool]:
    ctx = GenusContext(args.genus, args.precision)
    rows = []
    for level in args.levels:
        dim = twisted_dim(ctx, level)
        trig = Fraction(v_trig(ctx.h, 1, level + 1, args.precision), ctx.h)
        rows.append(("twisted", level, dim, trig, dim == trig))
    for level in args.levels:
        pair = untwisted_dim_pairing(ctx, level)
        trig = untwisted_dim_trig(ctx.g, level + 2, args.precision)
        rows.append(("untwisted", level, pair, trig, pair == trig))
    audits = [
        Audit(f"{kind} level {level}", agree, "ok" if agree else f"{a} != {b}")
        for kind, level, a, b, agree in rows
    ]
    fmt = args.format or "csv"
    if fmt == "json":
        results = [
            {"kind": kind, "level": level, "exact": json_rational(a), "trig": json_rational(b), "agree": agree}
            for kind, level, a, b, agree in rows
        ]
        out = _json("dims", args.genus, results, audits)
    elif fmt == "latex":
        lines = ["\\begin{tabular}{lr|rr}", "kind & level & exact & trig \\\\", "\\hline"]
        lines += [f"{kind} & {level} & {fmt_rational(a)} & {fmt_rational(b)} \\\\" for kind, level, a, b, _ in rows]
        lines.append("\\end{tabular}")
        out = "\n".join(lines) + "\n" + _latex_audits(audits)
    else:
        body = [[kind, level, fmt_rational(a), fmt_rational(b), "yes" if agree else "no"] for kind, level, a, b, agree in rows]
        out = _csv(["kind", "level", "exact", "trig", "agree"], body)
    return out, all(a.passed for a in audits)


def _class_json(x: CohClass) -> dict:
    terms = sorted(x.terms.items(), key=lambda kv: (kv[0].weight, -kv[0].m, -kv[0].n))
    return {
        "text": format_class(x),
        "terms": [{"m": k.m, "n": k.n, "p": k.p, "coeff": json_rational(c)} for k, c in terms],
    }


def cmd_chern(args) -> tuple[str, bool]:
    ctx = GenusContext(args.genus, args.precision)
    g = ctx.g
    classes = {
        "ch(T)": chc.ch_T(ctx).value,
        "ch(Q)": chc.ch_Q(ctx).value,
        "ch(W)": chc.ch_W(ctx).value,
        "Ahat": chc.ahat(ctx).value,
        "Td": chc.todd(ctx).value,
    }
    cs = chc.chern_Q_recurrence(ctx, g + 2)
    for k, c in enumerate(cs):
        classes[f"c_{k}(Q)"] = c
    audits = [Audit(f"c_{k}(Q) ≡ 0", is_zero_in_cohomology(cs[k])) for k in (g, g + 1, g + 2)]
    if g == 3:
        a, b = CohClass.alpha(ctx), CohClass.beta(ctx)
        rel = a**4 + 2 * (a * a * b) - 3 * (b * b)
        audits.append(Audit(f"{format_class(rel)} ≡ 0", is_zero_in_cohomology(rel)))
    audits = [Audit(a.name, a.passed, "ok" if a.passed else "nonzero pairing") for a in audits]

    if (args.format or "text") == "json":
        results = [{"name": name, **_class_json(x)} for name, x in classes.items()]
        out = _json("chern", g, results, audits)
    else:
        out = "".join(f"{name} = {format_class(x)}\n" for name, x in classes.items())
        out += "".join(f"{a.name}: {'PASS' if a.passed else 'FAIL'}\n" for a in audits)
    return out, all(a.passed for a in audits)


def cmd_check(args) -> tuple[str, bool]:
    g_max = args.g_max if args.g_max is not None else args.genus
    genera = range(args.genus, g_max + 1)
    results = run_checks(args.suite, genera, args.precision)
    flat = [Audit(f"g={g}: {a.name}", a.passed, a.detail) for g, audits in results.items() for a in audits]
    passed = all(a.passed for a in flat)
    fmt = args.format or "text"
    if fmt == "json":
        rows = [{"genus": g, "name": a.name, "pass": a.passed} for g, audits in results.items() for a in audits]
        return _json("check", list(genera), rows, flat), passed
    if fmt == "csv":
        return _audit_csv(flat), passed
    names = list(dict.fromkeys(a.name for audits in results.values() for a in audits))
    width = max(len(n) for n in names)
    lines = [" " * width + "  " + " ".join(f"g={g:<3}" for g in genera)]
    for name in names:
        marks = []
        for g in genera:
            hit = [a for a in results[g] if a.name == name]
            marks.append(("PASS " if hit[0].passed else "FAIL ") if hit else "  -  ")
        lines.append(f"{name:<{width}}  " + " ".join(marks))
    failed = [a for a in flat if not a.passed]
    lines.append(f"{len(flat) - len(failed)}/{len(flat)} checks passed")
    lines += [f"FAILED {a.name}: {a.detail}" for a in failed]
    return "\n".join(lines) + "\n", passed


COMMANDS = {
    "table": cmd_table,
    "intersections": cmd_intersections,
    "dims": cmd_dims,
    "chern": cmd_chern,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2moduli",
        description="Intersection numbers, characteristic classes and Verlinde numbers of M_g.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("-g", "--genus", type=int, default=2)
    parser.add_argument("--g-max", type=int, default=None, help="last genus for 'check'")
    parser.add_argument("--p-min", type=int, default=-3)
    parser.add_argument("--p-max", type=int, default=3)
    parser.add_argument("--q-min", type=int, default=-3)
    parser.add_argument("--q-max", type=int, default=3)
    parser.add_argument("--levels", type=parse_range, default=range(0, 3), help="e.g. 0..2")
    parser.add_argument("--format", choices=["csv", "json", "latex", "text"], default=None)
    parser.add_argument("--precision", type=int, default=128, help="bits for the trigonometric routes")
    parser.add_argument("--out", default=None, help="write output here instead of stdout")
    parser.add_argument("--suite", choices=["all", *SUITES], default="all")
    return parser


def _validate(parser, args):
    if args.genus < 2:
        parser.error("--genus must be at least 2")
    if args.g_max is not None and args.g_max < args.genus:
        parser.error("--g-max must not be below --genus")
    if args.p_max < args.p_min or args.q_max < args.q_min:
        parser.error("empty p or q range")
    if args.precision < 64:
        parser.error("--precision must be at least 64")
    if args.levels.start < 0:
        parser.error("levels must be non-negative")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        out, passed = COMMANDS[args.command](args)
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
