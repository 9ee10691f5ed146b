#!/usr/bin/env python3
"""
Graded Structures Tool
======================
Entry script for the graded rings and modules kernel.

Usage:
    python graded.py check ring.json                    # run every predicate
    python graded.py check module.json --format json
    python graded.py submodules module.json --primes    # graded prime submodules
    python graded.py verify-paper --example z36i        # one registry fixture
    python graded.py fuzz --seed 7 --count 50           # implication suite
    python graded.py fmt ring.json --in-place           # canonical form
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
