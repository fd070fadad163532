#!/usr/bin/env python3
"""Joint photon statistics of a translated kitten against its local
oscillator, for a range of herald counts.

One CSV per herald count. Odd herald counts push P(n0 = n1) to zero
(exclusion of equal counts); even ones leave it at a measurable level.
"""

import sys

from dipnesim.cli import main


def run() -> int:
    extra = sys.argv[1:]
    for k in (1, 2, 3, 4, 5, 7, 9):
        out = f"numberdiff_k{k}.csv"
        code = main(["numberdiff", "--k", str(k), "--out", out, *extra])
        if code != 0:
            return code
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
