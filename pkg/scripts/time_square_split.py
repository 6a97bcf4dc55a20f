"""Wall-clock of the character route (square_split) as m and k grow."""

import argparse
import time

from grassembed.dims import dim_gl
from grassembed.lr import square_split

ap = argparse.ArgumentParser()
ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 4])
ap.add_argument("--k-max", type=int, default=4)
args = ap.parse_args()

print(f"{'m':>3} {'k':>3} {'dim F':>10} {'seconds':>9}")
for m in args.m:
    for k in range(1, args.k_max + 1):
        start = time.perf_counter()
        square_split((k, k), m + 2)
        print(f"{m:>3} {k:>3} {dim_gl((k, k), m + 2):>10} {time.perf_counter() - start:>9.3f}")
