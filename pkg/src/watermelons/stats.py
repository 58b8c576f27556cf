"""Mean number of wall contacts, exact in rational arithmetic."""
from __future__ import annotations

from fractions import Fraction

from .core import ContactPolynomial, DomainError, WatermelonSpec, as_rational, binom_nat


def mean_contacts(z: ContactPolynomial, kappa) -> Fraction:
    """Unnormalised mean kappa * Z'(kappa)."""
    kappa = as_rational(kappa)
    return Fraction(kappa * z.derivative().evaluate(kappa))


def normalized_mean(z: ContactPolynomial, kappa) -> Fraction:
    """Expected contact count kappa Z'(kappa) / Z(kappa) under the kappa-weighted ensemble."""
    kappa = as_rational(kappa)
    zk = z.evaluate(kappa)
    if zk == 0:
        raise DomainError(f"partition function vanishes at kappa={kappa}")
    return mean_contacts(z, kappa) / zk


def mean_kappa1(t: int, y: int, n: int) -> Fraction:
    """Normalized mean at kappa = 1, i.e. the average over all configurations."""
    WatermelonSpec(n, t, y)
    return 1 + Fraction(n * (y + 2 * n + 1) * (t - y), (y + n) * (t + y + 4 * n))


def mean_kappa2_y0(r: int, n: int) -> Fraction:
    """Normalized mean at kappa = 2 for deviation 0 and length 2r."""
    if r < 1 or n < 1:
        raise DomainError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    return (Fraction(2 ** (2 * r - 1) * n * binom_nat(2 * n, n), binom_nat(2 * r + 2 * n - 2, r + n - 1))
            - 2 * (n - 1))
