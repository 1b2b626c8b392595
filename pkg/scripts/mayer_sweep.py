#!/usr/bin/env python3
"""Sweep the Mayer-bond identity over q and emit CSV.

Columns: q, bond(Ra, Rb), step_hat(Ra + Rb), absolute deviation.

Usage: python scripts/mayer_sweep.py [Ra] [Rb] [qmax] [points]
"""

from __future__ import annotations

import sys

from fmspace.fmt import mayer_bond, step_hat


def main() -> int:
    args = sys.argv[1:]
    Ra = float(args[0]) if len(args) > 0 else 1.0
    Rb = float(args[1]) if len(args) > 1 else 0.5
    qmax = float(args[2]) if len(args) > 2 else 12.0
    points = int(args[3]) if len(args) > 3 else 120
    print("q,bond,step_hat,deviation")
    for i in range(1, points + 1):
        q = qmax * i / points
        bond = mayer_bond(Ra, Rb, q)
        ref = step_hat(Ra + Rb, q)
        print(f"{q:.6g},{bond:.12g},{ref:.12g},{abs(bond - ref):.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
