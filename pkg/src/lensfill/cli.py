"""Command-line front end.

Exit codes: 0 success, 1 a sweep found a violation, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence

from .fillings import (
    LensSpace,
    Filling,
    extremal_form,
    fib_level,
    fibonacci,
    fillings_of,
    lens_canonical,
)
from .rationals import INFINITY, cf_eval, cf_len, cf_U, cf_V, hj_expand, st_decompose
from .theorems import VERIFIERS, verify_fibonacci_extremal
from .zero_tuples import enumerate_zero_tuples

SCHEMA_VERSION = 1
INT64_MAX = 2**63 - 1

CSV_COLUMNS = [
    "p", "q", "q_canonical", "cap", "tuple", "b2", "pi1",
    "extremal_n", "extremal_d", "extremal_c", "len", "U", "V",
]

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_INT_FIELDS = ("p", "q", "q_canonical")
_TUPLE_FIELDS = ("cap", "tuple")


def output_record(F: Filling) -> dict:
    """Plain record (Python ints) for one filling."""
    L = F.lens
    f = Fraction(L.p, L.q)
    ext = extremal_form(F)
    return {
        "schema": SCHEMA_VERSION,
        "big_ints": False,
        "p": L.p,
        "q": L.q,
        "q_canonical": lens_canonical(L).q,
        "cap": list(F.cap),
        "tuple": list(F.tuple),
        "b2": F.b2,
        "pi1": F.pi1_order,
        "extremal": None if ext is None else asdict(ext),
        "len": cf_len(f),
        "U": cf_U(f),
        "V": cf_V(f),
    }


def encode_record(rec: dict) -> dict:
    """Switch p, q and the tuples to decimal strings if any value leaves int64.

    ``big_ints`` records which encoding was used so readers with fixed-width
    integers know to parse strings.
    """
    values = [rec[k] for k in _INT_FIELDS] + [x for k in _TUPLE_FIELDS for x in rec[k]]
    if all(abs(v) <= INT64_MAX for v in values):
        return dict(rec, big_ints=False)
    out = dict(rec, big_ints=True)
    for k in _INT_FIELDS:
        out[k] = str(rec[k])
    for k in _TUPLE_FIELDS:
        out[k] = [str(x) for x in rec[k]]
    return out


def decode_record(rec: dict) -> dict:
    if not rec.get("big_ints"):
        return dict(rec)
    out = dict(rec, big_ints=False)
    for k in _INT_FIELDS:
        out[k] = int(rec[k])
    for k in _TUPLE_FIELDS:
        out[k] = [int(x) for x in rec[k]]
    return out


def _fmt_tuple(t: Sequence) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _csv_row(rec: dict) -> list[str]:
    ext = rec["extremal"] or {}
    return [
        str(rec["p"]), str(rec["q"]), str(rec["q_canonical"]),
        " ".join(str(x) for x in rec["cap"]), " ".join(str(x) for x in rec["tuple"]),
        str(rec["b2"]), str(rec["pi1"]),
        str(ext.get("n", "")), str(ext.get("d", "")), str(ext.get("c", "")),
        str(rec["len"]), str(rec["U"]), str(rec["V"]),
    ]


def _lens_arg(p: int, q: int) -> LensSpace:
    try:
        return LensSpace(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_tuple(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse tuple {text!r}") from None


def cmd_cf(args, out) -> int:
    if args.eval is not None:
        value = cf_eval(_parse_tuple(args.eval))
        shown = "inf" if value is INFINITY else str(value)
        if args.format == "json":
            out.write(json.dumps({"tuple": list(_parse_tuple(args.eval)), "value": shown}) + "\n")
        else:
            out.write(f"value {shown}\n")
        return EXIT_OK
    if args.p is None or args.q is None:
        raise UsageError("cf needs P Q, or --eval TUPLE")
    L = _lens_arg(args.p, args.q)
    f = Fraction(L.p, L.q)
    info = {
        "p": L.p,
        "q": L.q,
        "expansion": list(hj_expand(f)),
        "len": cf_len(f),
        "U": cf_U(f),
        "V": cf_V(f),
        "word": st_decompose(f),
    }
    if args.format == "json":
        out.write(json.dumps(info) + "\n")
    else:
        out.write(f"expansion [{','.join(map(str, info['expansion']))}]\n")
        for key in ("len", "U", "V"):
            out.write(f"{key} {info[key]}\n")
        out.write(f"word {info['word'] or '(empty)'}\n")
    return EXIT_OK


def cmd_zero_tuples(args, out) -> int:
    try:
        tuples = sorted(enumerate_zero_tuples(args.k))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count:
        out.write(f"{len(tuples)}\n")
    elif args.format == "json":
        for t in tuples:
            out.write(json.dumps(list(t)) + "\n")
    else:
        for t in tuples:
            out.write(_fmt_tuple(t) + "\n")
    return EXIT_OK


def cmd_fillings(args, out) -> int:
    L = _lens_arg(args.p, args.q)
    records = [output_record(F) for F in fillings_of(L)]
    if args.format == "json":
        for rec in records:
            out.write(json.dumps(encode_record(rec)) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_csv_row(r) for r in records)
        out.write(buf.getvalue())
    else:
        out.write(f"L({L.p},{L.q})  canonical L({L.p},{records[0]['q_canonical']})  "
                  f"cap {_fmt_tuple(records[0]['cap'])}  {len(records)} filling(s)\n")
        for r in records:
            ext = r["extremal"]
            tail = f"  extremal n={ext['n']} d={ext['d']} c={ext['c']}" if ext else ""
            out.write(f"  {_fmt_tuple(r['tuple']):<24} b2={r['b2']:<4} pi1={r['pi1']}{tail}\n")
    return EXIT_OK


def _report_text(rep, out) -> None:
    status = "PASS" if rep.ok else "FAIL"
    out.write(f"{status} {rep.name} bound={rep.bound} checked={rep.checked} "
              f"violations={len(rep.violations)} equality_cases={len(rep.equality_cases)}\n")
    for v in rep.violations:
        out.write(f"  violation {json.dumps(v)}\n")
    if rep.name == "fibonacci":
        for case in rep.equality_cases:
            out.write(f"  L={case['L']} max={case['max']} maximizers={' '.join(case['maximizers'])}\n")


def cmd_verify(args, out) -> int:
    if args.p_max < 2 or args.l_max < 1 or args.jobs < 1:
        raise UsageError("need --p-max >= 2, --l-max >= 1, --jobs >= 1")
    names = list(VERIFIERS) + ["fibonacci"] if args.which == "all" else [args.which]
    reports = []
    for name in names:
        if name == "fibonacci":
            reports.append(verify_fibonacci_extremal(args.l_max))
        else:
            reports.append(VERIFIERS[name](args.p_max, jobs=args.jobs))
    for rep in reports:
        if args.format == "json":
            out.write(json.dumps(rep.to_dict()) + "\n")
        else:
            _report_text(rep, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def cmd_fib(args, out) -> int:
    try:
        value = fib_level(args.n) if args.level else fibonacci(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{value}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensfill",
        description="Minimal symplectic fillings of lens spaces and exhaustive checks of their bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", help="Hirzebruch-Jung expansion, len/U/V and S/T word of p/q")
    p_cf.add_argument("p", type=int, nargs="?")
    p_cf.add_argument("q", type=int, nargs="?")
    p_cf.add_argument("--eval", metavar="TUPLE", help="evaluate a comma-separated tuple instead")
    p_cf.add_argument("--format", choices=["table", "json"], default="table")
    p_cf.set_defaults(func=cmd_cf)

    p_zt = sub.add_parser("zero-tuples", help="admissible zero tuples of length K")
    p_zt.add_argument("k", type=int)
    p_zt.add_argument("--count", action="store_true")
    p_zt.add_argument("--format", choices=["table", "json"], default="table")
    p_zt.set_defaults(func=cmd_zero_tuples)

    p_fl = sub.add_parser("fillings", help="minimal symplectic fillings of L(p,q)")
    p_fl.add_argument("p", type=int)
    p_fl.add_argument("q", type=int)
    p_fl.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_fl.set_defaults(func=cmd_fillings)

    p_vf = sub.add_parser("verify", help="exhaustive sweeps")
    p_vf.add_argument("which", choices=[*VERIFIERS, "fibonacci", "all"])
    p_vf.add_argument("--p-max", type=int, default=300)
    p_vf.add_argument("--l-max", type=int, default=14)
    p_vf.add_argument("--jobs", type=int, default=1)
    p_vf.add_argument("--format", choices=["table", "json"], default="table")
    p_vf.set_defaults(func=cmd_verify)

    p_fib = sub.add_parser("fib", help="Fibonacci numbers (F_1 = F_2 = 1)")
    p_fib.add_argument("n", type=int)
    p_fib.add_argument("--level", action="store_true", help="print the largest l with F_{l+2} <= N instead")
    p_fib.set_defaults(func=cmd_fib)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"lensfill {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
