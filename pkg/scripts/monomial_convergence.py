#!/usr/bin/env python3
"""Error-vs-N table for the staircase integral of x, x^2, x^3.

The path is the segment 1+i -> 1+i+j. For F = x the sum telescopes and the
error sits at rounding noise for every N; the higher monomials converge at
first order with the left rule and second with midpoint.
"""

import argparse

from qint import Line, Monomial, Quaternion, convergence_study


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rule", choices=["left", "midpoint"], default="left")
    ap.add_argument("--max-exp", type=int, default=5,
                    help="largest N is 10**MAX_EXP (default 5)")
    args = ap.parse_args()

    path = Line(Quaternion(1, 1, 0, 0), Quaternion(1, 1, 1, 0))
    n_list = [10 ** k for k in range(2, args.max_exp + 1)]

    print(f"rule = {args.rule}, path = 1+i -> 1+i+j")
    header = "F(x)   " + "".join(f"  err @ N=1e{len(str(n)) - 1}" for n in n_list)
    print(header + "   fitted order")
    for n_pow in (1, 2, 3):
        study = convergence_study(Monomial(n_pow), path, n_list, rule=args.rule)
        errs = "".join(f"  {err:11.3e}" for _, _, err in study.rows)
        order = "exact" if study.is_exact() else f"{study.est_order:.3f}"
        print(f"x^{n_pow}    {errs}   {order}")


if __name__ == "__main__":
    main()
