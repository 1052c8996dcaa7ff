#!/usr/bin/env python3
"""Print the palindrome-count table and admissible length sets for one k,
side by side in both formula modes, with the scan value as referee."""

import argparse
import sys

from kbona import verify
from kbona.counting import FormulaMode, p_total
from kbona.palindromes import count_occurrences
from kbona.structure import allowed_lengths
from kbona.words import word


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=None)
    args = parser.parse_args()

    k = args.k
    n_max = args.n_max if args.n_max is not None else verify.default_n_max(k)
    print(f"k={k}, n up to {n_max}")
    print("n\tP_derived\tP_as_stated\tscan")
    for n in range(n_max + 1):
        derived = p_total(k, n, FormulaMode.DERIVED)
        stated = p_total(k, n, FormulaMode.AS_STATED)
        scan = count_occurrences(word(k, n), 2)
        mark = "" if derived == stated == scan else "  <- printed formula differs"
        print(f"{n}\t{derived}\t{stated}\t{scan}{mark}")
    for mode in FormulaMode:
        lengths = sorted(allowed_lengths(k, mode).lengths)
        print(f"admissible lengths ({mode.value}): {lengths}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
