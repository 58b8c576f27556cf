"""Show where the finite correction of the kappa > 2 series needs the band of
Laurent terms removed: compare the series with and without the band against
the exact polynomial."""
from fractions import Fraction

from watermelons.formulas import z_thm8, z_thm11

print("n,t,y,kappa,rel_err_as_printed,rel_err_band_removed")
for n in (1, 2, 3):
    for y in range(0, 5):
        for t in (y + 4, y + 8):
            for kappa in (2.5, 3.0, 10.0):
                exact = float(z_thm8(t, y, n).evaluate(Fraction(kappa)))
                printed = z_thm11(t, y, n, kappa, 1e-12, drop_band=False)
                fixed = z_thm11(t, y, n, kappa, 1e-12)
                print(f"{n},{t},{y},{kappa},{abs(printed - exact) / exact:.3g},"
                      f"{abs(fixed - exact) / exact:.3g}")
