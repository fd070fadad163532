#!/usr/bin/env python3
"""Exact vs strong-drive squeezing fraction across drive strengths."""

import sys

from dipnesim.cli import main

if __name__ == "__main__":
    sys.exit(main(["gaussdrive", "--out", "driving_fractions.csv", *sys.argv[1:]]))
