#!/usr/bin/env python3
"""Per-n cost of the Sturm-sequence step, to see how exact arithmetic scales.

Prints one CSV line per n: family, n, milliseconds, and the bit size of the
largest integer in the primitive chain's leading polynomial.
"""
import argparse
import csv
import sys
import time

from bmsturm.boros_moll import family_polynomial
from bmsturm.poly import primitive_ints
from bmsturm.verification import _sturm_step


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=50)
    ap.add_argument("--step", type=int, default=5)
    ap.add_argument("--family", choices=["q", "r"], default="q")
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["family", "n", "ms", "coeff_bits"])
    for n in range(max(1, args.step), args.n_max + 1, args.step):
        t0 = time.perf_counter()
        _sturm_step((args.family, n))
        ms = (time.perf_counter() - t0) * 1000
        bits = max(abs(c).bit_length() for c in primitive_ints(family_polynomial(args.family, n)))
        out.writerow([args.family, n, f"{ms:.1f}", bits])


if __name__ == "__main__":
    main()
