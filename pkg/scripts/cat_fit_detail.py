#!/usr/bin/env python3
"""Detailed squeezed-cat fit parameters (alpha, r, phi) over the sweep."""

import sys

from dipnesim.cli import main

if __name__ == "__main__":
    sys.exit(main(["catfit", "--out", "cat_fit_detail.csv", *sys.argv[1:]]))
