#!/usr/bin/env python3
"""Run every verification suite for a range of k and dump the JSON
reports, one file per (k, suite), into an output directory."""

import argparse
import json
import pathlib
import sys

from kbona import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-min", type=int, default=3)
    parser.add_argument("--k-max", type=int, default=5)
    parser.add_argument("--n-max", type=int, default=None,
                        help="override the per-k default range")
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("reports"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    failed = False
    for k in range(args.k_min, args.k_max + 1):
        for report in verify.run_suites(k, args.n_max):
            path = args.out / f"k{k}_{report.suite}.json"
            path.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True))
            s = report.summary
            print(f"k={k} {report.suite}: pass={s[verify.PASS]} "
                  f"fail={s[verify.FAIL]} discrepancy={s[verify.DISCREPANCY]} "
                  f"-> {path}")
            failed |= not report.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
