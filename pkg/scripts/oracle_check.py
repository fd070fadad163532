#!/usr/bin/env python3
"""Cross-validate the Fock simulator against Gaussian moment propagation
on randomized circuits. Exits 3 if any circuit misses tolerance.
"""

import sys

from dipnesim.cli import main

if __name__ == "__main__":
    sys.exit(main(["oracle-check", "--out", "oracle_check.csv", *sys.argv[1:]]))
