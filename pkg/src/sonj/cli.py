"""Command-line interface: compute single coefficients, regenerate the
coefficient table for all labels up to a cutoff, or run verification suites.

Exit codes: 0 success, 2 selection-rule-undefined 6j request, 64 usage
error, 65 evaluation at a pole.  All numbers are printed as exact base-10
strings; nothing here ever rounds.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .coupling import (
    CouplingLabels,
    SqrtRational,
    Triad,
    UndefinedBySelectionRules,
    c_alpha,
    i_alpha,
    selection_ok,
    sixj,
    sixj_squared,
    symmetry_orbit,
    threej_squared,
    g_reduced,
)
from .oracle import (
    QuadratureSpec,
    g_by_integration,
    i_by_eq2_so3,
    i_by_quadrature_n3,
    threej_squared_by_integration,
)
from .poly import PoleError, RatFuncN, factor_for_display, format_factored
from .rational import as_rat
from .reference import reference_table

EXIT_OK = 0
EXIT_SELECTION = 2
EXIT_USAGE = 64
EXIT_POLE = 65

QUANTITIES = ("I", "threej2", "sixj", "sixj2", "calpha")
SUITES = ("table1", "symmetry", "oracle3j", "oracleG", "oracleI3", "quadrature")

CSV_FIELDS = [
    "l1", "l2", "l3", "l4", "l5", "l6",
    "mode", "quantity", "value", "num_coeffs", "den_coeffs",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# -- value serialization -------------------------------------------------------


def value_to_json(value):
    if isinstance(value, RatFuncN):
        return {"type": "ratfunc", **value.to_json()}
    if isinstance(value, SqrtRational):
        ex = value.exact()
        return {
            "type": "sqrt",
            "sign": value.sign,
            "radicand": str(value.radicand),
            "exact": None if ex is None else str(ex),
        }
    return {"type": "rational", "value": str(value)}


def value_from_json(obj):
    kind = obj["type"]
    if kind == "ratfunc":
        return RatFuncN.from_json(obj)
    if kind == "sqrt":
        rad = as_rat(obj["radicand"])
        return SqrtRational(obj["sign"], rad)
    return as_rat(obj["value"])


def value_display(value):
    """Compact exact display string for any computed value."""
    if isinstance(value, RatFuncN):
        return format_factored(value)
    if isinstance(value, SqrtRational):
        ex = value.exact()
        if ex is not None:
            return str(ex)
        return ("-" if value.sign < 0 else "") + f"sqrt({value.radicand})"
    return str(value)


def make_record(labels, mode, quantity, value):
    return {
        "labels": list(labels),
        "mode": mode,
        "quantity": quantity,
        "value": value_to_json(value),
        "factored": value_display(value),
    }


# -- LaTeX rendering -----------------------------------------------------------


def _latex_poly(p):
    """Descending-power rendering, e.g. n^{2}+4n-24."""
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k] if k < len(p.coeffs) else 0
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = "" if mag == 1 else str(mag)
            body += "n" if k == 1 else f"n^{{{k}}}"
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _latex_factors(p):
    out = []
    for f, e in factor_for_display(p):
        if f.degree <= 0:
            s = str(f.coeffs[0] if f.coeffs else 0)
        elif f.degree == 1 and f.coeffs[1] == 1 and not f.coeffs[0]:
            s = "n"
        else:
            s = f"({_latex_poly(f)})"
        if e != 1:
            s += f"^{{{e}}}"
        out.append(s)
    return "".join(out) if out else "1"


def latex_value(value):
    if isinstance(value, RatFuncN):
        if value.is_zero():
            return "0"
        num = _latex_factors(value.num)
        if value.den.degree == 0 and value.den.coeffs[0] == 1:
            return num
        return rf"\frac{{{num}}}{{{_latex_factors(value.den)}}}"
    if isinstance(value, SqrtRational):
        ex = value.exact()
        if ex is not None:
            return latex_value(ex)
        sgn = "-" if value.sign < 0 else ""
        return sgn + rf"\sqrt{{{latex_value(value.radicand)}}}"
    v = as_rat(value)
    if v.denominator == 1:
        return str(v)
    sgn = "-" if v < 0 else ""
    return sgn + rf"\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"


# -- record emission -----------------------------------------------------------


def _csv_row(rec):
    val = rec["value"]
    row = dict(zip(("l1", "l2", "l3", "l4", "l5", "l6"), rec["labels"]))
    row["mode"] = rec["mode"]
    row["quantity"] = rec["quantity"]
    row["value"] = rec["factored"]
    if val["type"] == "ratfunc":
        row["num_coeffs"] = ";".join(val["num"])
        row["den_coeffs"] = ";".join(val["den"])
    else:
        row["num_coeffs"] = ""
        row["den_coeffs"] = ""
    return row


def emit(records, fmt, out):
    if fmt == "json":
        for rec in records:
            print(json.dumps(rec), file=out)
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for rec in records:
            w.writerow(_csv_row(rec))
    else:
        for rec in records:
            cells = [str(l) for l in rec["labels"]]
            cells.append(f"${rec['latex']}$")
            print(" & ".join(cells) + r" \\", file=out)


# -- compute -------------------------------------------------------------------


def _compute_value(quantity, labels, n):
    lab = CouplingLabels(*labels)
    if quantity == "I":
        return i_alpha(lab, n)
    if quantity == "calpha":
        return c_alpha(lab, n)
    if quantity == "threej2":
        return threej_squared(Triad(lab.l1, lab.l2, lab.l3), 0, n)
    if quantity == "sixj2":
        return sixj_squared(lab, n)
    return sixj(lab, n)


def cmd_compute(args, out):
    labels = args.labels
    n = None if args.symbolic else args.n
    try:
        value = _compute_value(args.quantity, labels, n)
    except UndefinedBySelectionRules as e:
        print(f"undefined by selection rules: {e}", file=sys.stderr)
        return EXIT_SELECTION
    except PoleError as e:
        print(f"pole: {e}", file=sys.stderr)
        return EXIT_POLE
    rec = make_record(labels, "symbolic" if n is None else n, args.quantity, value)
    rec["latex"] = latex_value(value)
    emit([rec], args.format, out)
    return EXIT_OK


# -- table ---------------------------------------------------------------------


def canonical_reps(lmax):
    """Sorted canonical orbit representatives with all triads admissible."""
    reps = set()
    rng = range(lmax + 1)
    for l1 in rng:
        for l2 in rng:
            for l3 in rng:
                if not selection_ok((l1, l2, l3)):
                    continue
                for l4 in rng:
                    for l5 in rng:
                        if not selection_ok((l3, l4, l5)):
                            continue
                        for l6 in rng:
                            t = (l1, l2, l3, l4, l5, l6)
                            if not CouplingLabels(*t).all_triads_ok():
                                continue
                            reps.add(min(
                                o.astuple() for o in symmetry_orbit(t)
                            ))
    return sorted(reps)


def cmd_table(args, out):
    n = None if args.symbolic else args.n
    fn = i_alpha if args.quantity == "I" else c_alpha
    records = []
    for t in canonical_reps(args.lmax):
        try:
            value = fn(CouplingLabels(*t), n)
        except PoleError as e:
            print(f"pole: {e}", file=sys.stderr)
            return EXIT_POLE
        if args.nonzero_only and not value:
            continue
        rec = make_record(t, "symbolic" if n is None else n, args.quantity, value)
        rec["latex"] = latex_value(value)
        records.append(rec)
    emit(records, args.format, out)
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def _suite_table1(lmax, seed):
    for t, (iexp, cexp) in sorted(reference_table().items()):
        lab = CouplingLabels(*t)
        name = "".join(map(str, t))
        yield f"table1 I {name}", i_alpha(lab) == iexp
        yield f"table1 c {name}", c_alpha(lab) == cexp


def _suite_symmetry(lmax, seed):
    rng = random.Random(seed)
    pool = canonical_reps(lmax)
    for i in range(50):
        t = rng.choice(pool)
        orbit = symmetry_orbit(t)
        name = "".join(map(str, t))
        yield f"symmetry orbit-size {name}", 24 % len(orbit) == 0
        ref = i_alpha(CouplingLabels(*t), 7)
        ok = all(i_alpha(o, 7) == ref for o in orbit)
        yield f"symmetry invariance {name}", ok


def _suite_oracle3j(lmax, seed):
    for l1 in range(lmax + 1):
        for l2 in range(l1, lmax + 1):
            for l3 in range(l2, lmax + 1):
                t = Triad(l1, l2, l3)
                if not t.admissible:
                    continue
                for n in (3, 4, 5, 6):
                    got = threej_squared(t, 0, n)
                    want = threej_squared_by_integration(t, n)
                    yield f"oracle3j {l1}{l2}{l3} n={n}", got == want


def _suite_oracleG(lmax, seed):
    for j1 in range(lmax + 1):
        for j2 in range(j1, lmax + 1):
            for j3 in range(j2, lmax + 1):
                if (j1 + j2 + j3) % 2:
                    continue
                for m in range(4):
                    for n in (3, 5, 6):
                        got = g_reduced(j1, j2, j3, m, n)
                        want = g_by_integration(j1, j2, j3, m, n)
                        yield f"oracleG {j1}{j2}{j3} m={m} n={n}", got == want


def _suite_oracleI3(lmax, seed):
    for t in canonical_reps(lmax):
        got = i_alpha(CouplingLabels(*t), 3)
        want = i_by_eq2_so3(t)
        yield f"oracleI3 {''.join(map(str, t))}", got == want


def _suite_quadrature(lmax, seed):
    spec = QuadratureSpec(points_per_angle=11)
    for t in sorted(reference_table()):
        exact = float(i_alpha(CouplingLabels(*t), 3))
        approx, err = i_by_quadrature_n3(t, spec)
        tol = max(err, 1e-10 * (1.0 + abs(exact)))
        yield f"quadrature {''.join(map(str, t))}", abs(approx - exact) <= tol


_SUITE_FNS = {
    "table1": _suite_table1,
    "symmetry": _suite_symmetry,
    "oracle3j": _suite_oracle3j,
    "oracleG": _suite_oracleG,
    "oracleI3": _suite_oracleI3,
    "quadrature": _suite_quadrature,
}

_SUITE_DEFAULT_LMAX = {
    "table1": 4,
    "symmetry": 4,
    "oracle3j": 6,
    "oracleG": 6,
    "oracleI3": 4,
    "quadrature": 4,
}


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    passed = failed = 0
    for suite in names:
        lmax = args.lmax if args.lmax is not None else _SUITE_DEFAULT_LMAX[suite]
        for case, ok in _SUITE_FNS[suite](lmax, args.seed):
            print(("PASS " if ok else "FAIL ") + case, file=out)
            if ok:
                passed += 1
            else:
                failed += 1
    print(f"{passed} passed, {failed} failed", file=out)
    return EXIT_OK if failed == 0 else 1


# -- argument parsing ----------------------------------------------------------


def _labels_arg(s):
    parts = s.split(",")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError("expected six comma-separated labels")
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("labels must be integers")
    if any(l < 0 for l in labels):
        raise argparse.ArgumentTypeError("labels must be non-negative")
    return labels


def _add_mode_flags(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="fixed integer dimension parameter, >= 2")
    g.add_argument("--symbolic", action="store_true",
                   help="compute as a rational function of n")


def build_parser():
    parser = _Parser(prog="sonj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one coefficient")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--labels", type=_labels_arg, required=True,
                   metavar="l1,l2,l3,l4,l5,l6")
    _add_mode_flags(p)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("table", help="table over canonical orbit representatives")
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--quantity", choices=("I", "calpha"), default="I")
    _add_mode_flags(p)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.add_argument("--nonzero-only", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 2:
        parser.error("--n must be an integer >= 2")
    if getattr(args, "lmax", None) is not None and args.lmax < 0:
        parser.error("--lmax must be non-negative")
    if args.command == "table" and args.lmax > 8:
        parser.error("--lmax above 8 is not supported")
    if args.command == "compute" and args.quantity == "sixj" and args.symbolic:
        parser.error("sixj needs --n; use sixj2 for the symbolic square")
    out = sys.stdout
    if args.command == "compute":
        return cmd_compute(args, out)
    if args.command == "table":
        return cmd_table(args, out)
    return cmd_verify(args, out)


if __name__ == "__main__":
    raise SystemExit(main())
