#!/usr/bin/env python3
"""Branch-tracked integral of d(ln x) around circles that wind m times
around the origin of one slice plane.

Each loop picks up 2*pi*m*u, where u is the slice direction of the circle,
never a multiple of some fixed i. The residual against that closed form
shrinks like 1/N; pass a larger --steps to watch it drop.
"""

import argparse
import math

from qint import (NamedFunction, Quaternion, SliceCircle, UnitImaginary,
                  integrate_with_branch_tracking)

DIRECTIONS = {
    "i": UnitImaginary(Quaternion(0, 1, 0, 0)),
    "j": UnitImaginary(Quaternion(0, 0, 1, 0)),
    "(i+j+k)/sqrt3": UnitImaginary(Quaternion(0, 1, 1, 1)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=10_000)
    ap.add_argument("--turns", type=float, nargs="*", default=[-1, 1, 2, 3])
    args = ap.parse_args()

    ln = NamedFunction("ln")
    print(f"unit circles, N = {args.steps}")
    print(f"{'u':>14} {'m':>5}   {'value':<46} residual")
    for name, u in DIRECTIONS.items():
        for m in args.turns:
            rep = integrate_with_branch_tracking(
                ln, SliceCircle(0.0, 1.0, u, m), args.steps)
            expected = u.scaled(2.0 * math.pi * m)
            res = (rep.value - expected).norm()
            comps = ", ".join(f"{c:+.5f}" for c in rep.value.to_list())
            print(f"{name:>14} {m:>5g}   {'[' + comps + ']':<46} {res:.3e}")


if __name__ == "__main__":
    main()
