"""Command-line front end.

Subcommands: gen, count, decompose, structure, lengths, verify.
Exit codes: 0 success (documented discrepancies included unless
--strict-paper), 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import counting, structure, verify
from .counting import FormulaMode
from .palindromes import count_occurrences
from .words import (
    DigitOverflowError,
    DomainError,
    GenMethod,
    LengthGuardError,
    Word,
    reduce_mod_k,
    word,
)


def _mode(value: str) -> FormulaMode:
    return FormulaMode(value)


def _max_len() -> int | None:
    raw = os.environ.get("KBONA_MAX_LEN")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"KBONA_MAX_LEN must be an integer, got {raw!r}") from exc


def _emit_json(k: int, subcommand: str, results: list[dict[str, Any]], out) -> None:
    print(json.dumps({"k": k, "subcommand": subcommand, "results": results},
                     sort_keys=True), file=out)


def _format_word(w: Word, fmt: str) -> str:
    if fmt == "plain":
        return w.to_plain()
    return w.to_spaced()


def _cmd_gen(args, out) -> int:
    method = GenMethod(args.method)
    w = word(args.k, args.n, method, max_len=_max_len())
    if args.mod_k:
        w = reduce_mod_k(args.k, w)
    if args.format == "json":
        _emit_json(args.k, "gen", [{"n": args.n, "mod_k": bool(args.mod_k),
                                    "digits": list(w.digits)}], out)
    else:
        print(_format_word(w, args.format), file=out)
    return 0


def _cmd_count(args, out) -> int:
    mode = _mode(args.mode)
    rows = []
    mismatch = False
    for n in range(args.n_max + 1):
        row: dict[str, Any] = {"n": n, "p": counting.p_total(args.k, n, mode)}
        if args.oracle:
            row["oracle"] = count_occurrences(word(args.k, n, max_len=_max_len()), 2)
            if row["oracle"] != row["p"]:
                mismatch = True
        rows.append(row)
    if args.format == "json":
        _emit_json(args.k, "count", rows, out)
    else:
        header = ["n", "p"] + (["oracle"] if args.oracle else [])
        print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(str(row[h]) for h in header), file=out)
    return 1 if mismatch else 0


def _cmd_decompose(args, out) -> int:
    report = verify.verify_decomposition(args.k, args.n)
    return _emit_report(args, [report], out)


def _cmd_structure(args, out) -> int:
    if args.classify is not None:
        w = Word.parse(args.classify)
        classes = sorted(structure.classify_palindrome(args.k, w),
                         key=lambda c: (c.family.value, c.shift, c.describe()))
        if args.format == "json":
            _emit_json(args.k, "structure",
                       [{"word": list(w.digits),
                         "classes": [c.describe() for c in classes]}], out)
        else:
            if classes:
                for c in classes:
                    print(c.describe(), file=out)
            else:
                print("(no catalog membership)", file=out)
        return 0
    families = (list(structure.PalFamily) if args.family == "all"
                else [structure.PalFamily(args.family)])
    rows = []
    for family in families:
        for element, cls in structure.catalog_elements(args.k, family, args.i_max):
            rows.append({"class": cls.describe(), "digits": list(element.digits)})
    if args.format == "json":
        _emit_json(args.k, "structure", rows, out)
    else:
        for row in rows:
            print(f"{row['class']}\t{' '.join(str(d) for d in row['digits'])}",
                  file=out)
    return 0


def _cmd_lengths(args, out) -> int:
    mode = _mode(args.mode)
    ls = structure.allowed_lengths(args.k, mode)
    if args.format == "json":
        _emit_json(args.k, "lengths",
                   [{"mode": mode.value, "lengths": sorted(ls.lengths)}], out)
    else:
        print(" ".join(str(x) for x in sorted(ls.lengths)), file=out)
    return 0


def _emit_report(args, reports: list[verify.Report], out) -> int:
    strict = getattr(args, "strict_paper", False)
    if args.format == "json":
        _emit_json(args.k, args.command, [r.to_dict() for r in reports], out)
    else:
        for r in reports:
            s = r.summary
            print(f"suite {r.suite}: pass={s[verify.PASS]} fail={s[verify.FAIL]} "
                  f"discrepancy={s[verify.DISCREPANCY]} skipped={s[verify.SKIPPED]}",
                  file=out)
            for res in r.results:
                if res.verdict != verify.PASS:
                    subject = " ".join(f"{k}={v}" for k, v in res.subject.items())
                    print(f"  [{res.verdict}] {res.check_id} {subject}: "
                          f"expected {res.expected} ({res.provenance}), "
                          f"got {res.actual}", file=out)
    if any(not r.ok for r in reports):
        return 1
    if strict and any(not r.strict_ok() for r in reports):
        return 1
    return 0


def _cmd_verify(args, out) -> int:
    suites = None if args.suite == "all" else [args.suite]
    reports = verify.run_suites(args.k, args.n_max, suites)
    return _emit_report(args, reports, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbona",
        description="k-bonacci words over the infinite alphabet: generation, "
                    "palindrome counting, structure, and formula verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="spaced", formats=("plain", "spaced", "json")):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=formats, default=default_format)

    p = sub.add_parser("gen", help="generate a k-bonacci word")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=[m.value for m in GenMethod],
                   default=GenMethod.RECURRENCE.value)
    p.add_argument("--mod-k", action="store_true",
                   help="reduce digits mod k (the classical word)")

    p = sub.add_parser("count", help="palindrome count table")
    add_common(p, formats=("plain", "json"), default_format="plain")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in FormulaMode],
                   default=FormulaMode.DERIVED.value)
    p.add_argument("--oracle", action="store_true",
                   help="also scan the generated words and compare")

    p = sub.add_parser("decompose", help="crossing classification of W_n")
    add_common(p, formats=("plain", "json"), default_format="plain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict-paper", action="store_true")

    p = sub.add_parser("structure", help="palindrome catalog / classification")
    add_common(p, formats=("plain", "json"), default_format="plain")
    p.add_argument("--class", dest="family",
                   choices=["p1", "p2", "p3", "p4", "all"], default="all")
    p.add_argument("--i-max", type=int, default=0)
    p.add_argument("--classify", metavar="WORD",
                   help="classify a palindrome instead of listing the catalog")

    p = sub.add_parser("lengths", help="admissible palindrome lengths")
    add_common(p, formats=("plain", "json"), default_format="plain")
    p.add_argument("--mode", choices=[m.value for m in FormulaMode],
                   default=FormulaMode.DERIVED.value)

    p = sub.add_parser("verify", help="run verification suites")
    add_common(p, formats=("plain", "json"), default_format="plain")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--suite",
                   choices=sorted(verify.SUITES) + ["all"], default="all")
    p.add_argument("--strict-paper", action="store_true",
                   help="treat documented discrepancies with the printed "
                        "formulas as failures")
    return parser


COMMANDS = {
    "gen": _cmd_gen,
    "count": _cmd_count,
    "decompose": _cmd_decompose,
    "structure": _cmd_structure,
    "lengths": _cmd_lengths,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except (DomainError, LengthGuardError, DigitOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
