"""Closed forms and series for the watermelon partition function.

Exact routes accumulate rationals and check at the end that every
coefficient is a nonnegative integer. Series routes work in floating point
with factorial prefactors taken through ``lgamma``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

import numpy as np

from .core import (
    ContactPolynomial,
    DomainError,
    WatermelonSpec,
    as_rational,
    binom_gen,
    binom_nat,
    pochhammer,
    polynomial_from_fractions,
)

KAPPA_MIN = 2 * (math.sqrt(2) - 1)
MAX_TERMS = 10**6


class ConvergenceError(ArithmeticError):
    """A series did not reach the requested tolerance within the term cap."""


def _lf(m: int) -> float:
    return math.lgamma(m + 1)


def _prod_frac(num: list[int], den: list[int]) -> Fraction:
    p, q = 1, 1
    for m in num:
        p *= factorial(m)
    for m in den:
        q *= factorial(m)
    return Fraction(p, q)


def _series_spec(t: int, y: int, n: int) -> WatermelonSpec:
    spec = WatermelonSpec(n, t, y)
    if t < 1 or t + y < 2:
        raise DomainError(f"need t >= 1 and t + y >= 2, got t={t}, y={y}")
    return spec


# -- exact routes -------------------------------------------------------------

def thm4_prefactor(r: int, n: int) -> Fraction:
    num = [r - 1] + [2 * i + 1 for i in range(n)] + [2 * r + 2 * i for i in range(n - 1)]
    den = [r + i for i in range(2 * n - 1)]
    return _prod_frac(num, den)


def z_thm4(r: int, n: int) -> ContactPolynomial:
    """Deviation-0 watermelon as a product prefactor times a single sum."""
    if r < 1 or n < 1:
        raise DomainError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    pre = thm4_prefactor(r, n)
    coeffs = {
        ell + 2: pre * binom_nat(2 * r - ell - 2, r - 1) * binom_nat(ell + 2 * n - 1, ell)
        for ell in range(r)
    }
    return polynomial_from_fractions(coeffs, what="z_thm4")


def thm8_prefactor(t: int, y: int, n: int) -> Fraction:
    a, b = (t + y) // 2, (t - y) // 2
    num = [a - 1]
    den = [a + 2 * n - 2]
    for i in range(n - 1):
        num += [t + 2 * i, i, y + n + i - 1]
        den += [a + n + i - 1, b + i, y + 2 * i]
    return _prod_frac(num, den)


def thm8_summand(t: int, y: int, n: int, ell: int, k: int) -> Fraction:
    """Summand (without kappa) of the double sum; binom(y+2k-2, 2k) uses binom_gen."""
    a, b = (t + y) // 2, (t - y) // 2
    c = (binom_nat(n - 1, k) * binom_gen(y + 2 * k - 2, 2 * k)
         * binom_nat(t - ell - 1, b - ell - k) * binom_nat(y + ell + 2 * n - 2, 2 * n - 2 * k - 1))
    if not c:
        return Fraction(0)
    c *= factorial(2 * n - 2 * k - 1) * factorial(2 * k)
    if k % 2:
        c = -c
    return c * pochhammer(a, k) / pochhammer(b + n - k, k)


def thm8_coefficients(t: int, y: int, n: int, weight=None) -> dict[int, Fraction]:
    """Inner sums over k for each ell, optionally multiplied by weight(ell)."""
    out = {}
    for ell in range((t - y) // 2 + 1):
        s = sum((thm8_summand(t, y, n, ell, k) for k in range(n)), Fraction(0))
        out[ell] = s if weight is None else s * weight(ell)
    return out


def z_thm8(t: int, y: int, n: int) -> ContactPolynomial:
    """Watermelon partition function from the double-sum formula."""
    _series_spec(t, y, n)
    pre = thm8_prefactor(t, y, n)
    inner = thm8_coefficients(t, y, n)
    return polynomial_from_fractions({ell + 1: pre * v for ell, v in inner.items()}, what="z_thm8")


def thm9_coefficients(t: int, y: int, n: int) -> dict[int, int]:
    """Coefficients of kappa*(kappa-1)^h: watermelons with h marked contacts."""
    _series_spec(t, y, n)
    a, b = (t + y) // 2, (t - y) // 2
    num = [t + 2 * i for i in range(n)] + list(range(n))
    den = []
    for i in range(n - 1):
        num.append(y + n + i - 1)
        den += [y + 2 * i, a + n + i, b + i + 1]
    pre = _prod_frac(num, den)
    out = {}
    for h in range(b + 1):
        v = pre * binom_nat(n + h - 1, n - 1) * (y + 2 * n + 2 * h - 1) * _prod_frac(
            [y + 2 * n + h - 2], [y + n + h - 1, a + 2 * n + h - 1, b - h])
        if v.denominator != 1 or v < 0:
            raise ArithmeticError(f"marked-contact count is not a count: {v} at h={h}")
        out[h] = v.numerator
    return out


def assemble_thm9(coeffs: dict[int, int]) -> ContactPolynomial:
    """Expand sum_h c_h kappa (kappa-1)^h into the monomial basis."""
    out: dict[int, int] = {}
    for h, c in coeffs.items():
        for j in range(h + 1):
            out[j + 1] = out.get(j + 1, 0) + c * binom_nat(h, j) * (-1) ** (h - j)
    return ContactPolynomial(out)


def z_thm9(t: int, y: int, n: int) -> tuple[dict[int, int], ContactPolynomial]:
    coeffs = thm9_coefficients(t, y, n)
    return coeffs, assemble_thm9(coeffs)


def z_kappa1(t: int, y: int, n: int) -> int:
    """Total number of watermelon configurations (product formula)."""
    WatermelonSpec(n, t, y)
    a, b = (t + y) // 2, (t - y) // 2
    num, den = [], []
    for i in range(n):
        num += [y + n + i, t + 2 * i, i]
        den += [y + 2 * i, a + n + i, b + i]
    v = _prod_frac(num, den)
    assert v.denominator == 1
    return v.numerator


def z_kappa2(t: int, y: int, n: int) -> int:
    """Partition function at the critical fugacity kappa = 2 (product formula)."""
    WatermelonSpec(n, t, y)
    a, b = (t + y) // 2, (t - y) // 2
    num, den = [], []
    for i in range(n):
        num += [y + n + i - 1, t + 2 * i, i]
        den += [y + 2 * i, a + n + i - 1, b + i]
    v = 2 * _prod_frac(num, den)
    assert v.denominator == 1
    return v.numerator


# -- series routes ------------------------------------------------------------

def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not kappa > KAPPA_MIN:
        raise DomainError(f"series needs kappa > 2(sqrt 2 - 1) = {KAPPA_MIN:.6f}, got {kappa}")
    return kappa


def _tail_sum(ratio, x: float, rel_tol: float, max_terms: int = MAX_TERMS) -> float:
    """Sum of terms u_0 = 1, u_{h+1} = u_h * ratio(h) * x, in index order.

    Stops once the local ratio is within the asymptotic ratio q = 4|x| and the
    geometric tail bound |u_h| q/(1-q) falls below rel_tol times the partial sum.
    ``ratio`` must accept a float array of indices.
    """
    if rel_tol <= 0:
        raise DomainError("rel_tol must be positive")
    if x == 0:
        return 1.0
    q = 4 * abs(x)
    if q >= 1:
        raise DomainError(f"series ratio {q} is not below 1")
    bound = (1 - q) / q
    s = term = 1.0
    h0 = 0
    block = 256
    while h0 < max_terms:
        hs = np.arange(h0, min(h0 + block, max_terms), dtype=float)
        rho = ratio(hs) * x
        terms = term * np.cumprod(rho)
        partial = s + np.cumsum(terms)
        done = (np.abs(rho) <= q) & (np.abs(terms) <= rel_tol * np.abs(partial) * bound)
        hit = np.flatnonzero(done)
        if hit.size:
            return float(partial[hit[0]])
        s, term = float(partial[-1]), float(terms[-1])
        h0 += hs.size
        block = min(block * 2, 1 << 16)
    raise ConvergenceError(f"no convergence within {max_terms} terms (q={q})")


def z_cor5(r: int, n: int, kappa: float, rel_tol: float = 1e-12) -> float:
    """Deviation-0 partition function at a real kappa via the (kappa-1)/kappa^2 series."""
    if r < 1 or n < 1:
        raise DomainError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    kappa = _check_kappa(kappa)
    if kappa == 2:
        return float(z_kappa2(2 * r, 0, n))
    x = (kappa - 1) / kappa**2
    log_pre = (sum(_lf(2 * i + 1) + _lf(2 * r + 2 * i) for i in range(n))
               - sum(_lf(r + i) for i in range(2 * n)))

    def ratio(h):
        return ((n + h) * (2 * r + 2 * n - 1 + 2 * h) * (2 * r + 2 * n + 2 * h)
                / ((h + 1) * (r + n + h) * (r + 2 * n + h)))

    s = _tail_sum(ratio, x, rel_tol)
    value = math.exp(log_pre - (2 * n - 2) * math.log(kappa)) * s
    if kappa > 2:
        w = (1 - kappa) / kappa**2
        finite = 0.0
        for h in range(n):
            finite += math.comb(n - 1, h) * math.exp(
                _lf(r + n - h - 1) + _lf(r + 2 * n - h - 2) - _lf(2 * r + 2 * n - 2 * h - 2)
            ) * w**h
        log_extra = (log_pre + math.log(kappa - 2) + (2 * r + 2 * n - 1) * math.log(kappa)
                     - (r + 2 * n - 1) * math.log(kappa - 1)
                     + _lf(r + 2 * n - 1) - _lf(2 * n - 1) - _lf(r + n - 1))
        value += math.exp(log_extra) * finite
    return value


def thm11_finite_part(t: int, y: int, n: int, kappa, drop_band: bool = True) -> Fraction:
    """Exact finite correction of the kappa > 2 series, prefactor included.

    Written as kappa times a Laurent polynomial in u = kappa - 1. With
    ``drop_band`` the powers u^-1 ... u^-(2n+y-2) are removed: kappa times
    such terms can appear in neither the polynomial Z(kappa) nor the series
    part, whose powers of u are all <= -(2n+y-1). The printed finite sum
    carries spurious terms there once y >= 2; for y <= 1 the band is empty.
    """
    kappa = Fraction(kappa)
    a, b = (t + y) // 2, (t - y) // 2
    num, den = [], []
    for i in range(n - 1):
        num.append(y + n + i - 1)
        den.append(y + 2 * i)
    for i in range(n):
        num += [t + 2 * i, i]
        den += [b + i, a + n + i - 1]
    pre = _prod_frac(num, den)
    laurent: dict[int, Fraction] = {}
    for h in range(n):
        w = _prod_frac([a + 2 * n - h - 2, b + n - h - 1], [h, n - h - 1, t + 2 * n - 2 * h - 2])
        m = 2 * n + t - 2 - 2 * h
        # (u - 1)(u + 1)^m (-u)^h / u^(a+2n-1)
        for j in range(m + 2):
            c = binom_nat(m, j - 1) - binom_nat(m, j)
            if c:
                e = j + h - (a + 2 * n - 1)
                laurent[e] = laurent.get(e, 0) + (-1) ** h * w * c
    if drop_band:
        laurent = {e: c for e, c in laurent.items() if not -(2 * n + y - 2) <= e <= -1}
    u = kappa - 1
    return kappa * pre * sum((c * u**e for e, c in laurent.items()), Fraction(0))


def z_thm11(t: int, y: int, n: int, kappa: float, rel_tol: float = 1e-12,
            drop_band: bool = True) -> float:
    """Watermelon partition function at a real kappa via the infinite series.

    kappa = 2 is answered by the exact product formula. Above 2 the series is
    completed by :func:`thm11_finite_part`, evaluated exactly.
    """
    _series_spec(t, y, n)
    kappa = _check_kappa(kappa)
    if kappa == 2:
        return float(z_kappa2(t, y, n))
    a, b = (t + y) // 2, (t - y) // 2
    x = (kappa - 1) / kappa**2
    log_pre = (sum(_lf(y + n + i - 1) - _lf(y + 2 * i) for i in range(n - 1))
               + sum(_lf(t + 2 * i) + _lf(i) - _lf(b + i) - _lf(a + n + i - 1) for i in range(n)))
    log_first = _lf(y + 2 * n - 1) + _lf(a + n - 1) - _lf(y + n - 1) - _lf(a + 2 * n - 1)

    def ratio(h):
        return ((y + 2 * n + 2 * h) * (y + 2 * n + 2 * h + 1) * (a + n + h)
                / ((h + 1) * (y + n + h) * (a + 2 * n + h)))

    s = _tail_sum(ratio, x, rel_tol)
    series = math.exp(log_pre + log_first - (2 * n + y - 1) * math.log(kappa)) * s
    if kappa < 2:
        return (2 - kappa) * series
    return (kappa - 2) * series + float(thm11_finite_part(t, y, n, kappa, drop_band))


def exact_value(p: ContactPolynomial, kappa) -> Fraction:
    """Exact rational value of a partition function at a rational kappa."""
    return Fraction(p.evaluate(as_rational(kappa)))
