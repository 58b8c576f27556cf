"""Run every exact route on a grid and report agreement with the oracle."""
import argparse
import sys
import time

from watermelons.cli import crosscheck

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=3)
ap.add_argument("--max-t", type=int, default=12)
ap.add_argument("--max-y", type=int, default=4)
args = ap.parse_args()

t0 = time.time()
lines, bad = crosscheck(args.max_n, args.max_t, args.max_y)
print(f"{len(lines)} grid points in {time.time() - t0:.1f}s")
for b in bad:
    print("MISMATCH", b)
print("PASS" if not bad else "FAIL")
sys.exit(1 if bad else 0)
