"""Exact versus leading-order asymptotics as t doubles; writes CSV to stdout."""
import argparse

from watermelons.asym import convergence_report, mean_asym
from watermelons.stats import mean_kappa2_y0

ap = argparse.ArgumentParser()
ap.add_argument("--t-max", type=int, default=2000)
ap.add_argument("--steps", type=int, default=4)
args = ap.parse_args()

ts = [args.t_max >> k for k in range(args.steps)][::-1]
print("n,y,kappa,t,ratio,abs_ratio_minus_1,shrink")
for n, y, kappa in [(1, 0, 1), (1, 0, 2), (2, 0, 1), (2, 0, 2), (1, 2, 2), (1, 0, 3), (2, 0, 3)]:
    rep = convergence_report(y, n, kappa, [t + (t - y) % 2 for t in ts])
    shrink = [""] + [f"{f:.4g}" for f in rep.shrink_factors]
    for row, s in zip(rep.rows, shrink):
        print(f"{n},{y},{kappa},{row.t},{row.ratio:.17g},{row.error:.6g},{s}")

print()
print("n,t,mean_exact,mean_asym,gap")
for n in (1, 2, 3):
    for t in ts:
        r = t // 2
        exact = float(mean_kappa2_y0(r, n))
        print(f"{n},{2 * r},{exact:.10g},{mean_asym(2 * r, 0, n, 2):.10g},"
              f"{abs(exact - mean_asym(2 * r, 0, n, 2)):.6g}")
