"""Leading-order asymptotics of the partition function and of the mean contact number.

Three regimes, split by the sign of kappa - 2. Everything is evaluated in
log space; :class:`AsymptoticEstimate` keeps the logarithm because the
values themselves overflow a float for t in the low thousands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import DomainError, as_rational, binom_gen, binom_nat
from .formulas import z_kappa1, z_kappa2, z_thm8

SUB, CRIT, SUPER = "subcritical", "critical", "supercritical"


def _lf(m: int) -> float:
    return math.lgamma(m + 1)


def regime(kappa) -> str:
    if kappa <= 0:
        raise DomainError(f"need kappa > 0, got {kappa}")
    if kappa < 2:
        return SUB
    return CRIT if kappa == 2 else SUPER


@dataclass(frozen=True)
class AsymptoticEstimate:
    """constant * growth_rate**t * t**(-critical_exponent)."""

    regime: str
    t: int
    growth_rate: float
    critical_exponent: float
    constant: float

    @property
    def log_value(self) -> float:
        return (math.log(self.constant) + self.t * math.log(self.growth_rate)
                - self.critical_exponent * math.log(self.t))

    @property
    def value(self) -> float:
        """The leading term itself; ``inf`` once it leaves float range."""
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf


def _log_product(y: int, n: int, upper: int) -> float:
    # sum over i < upper of log i! (y+n+i-1)! / (y+2i)!
    return sum(_lf(i) + _lf(y + n + i - 1) - _lf(y + 2 * i) for i in range(upper))


def _h_sum(y: int, n: int, kappa: float, extra: int = 0, weighted: bool = False) -> float:
    total = 0.0
    for h in range(n + 1):
        c = binom_nat(n, h) * binom_gen(y + h - 2, h) / binom_nat(2 * n, h)
        if weighted:
            c *= 2 * n - h
        total += c / (2 - kappa) ** (2 * n - h + extra)
    return total


def z_asym_leading(t: int, y: int, n: int, kappa) -> AsymptoticEstimate:
    """Leading term of the partition function as t grows with y, n, kappa fixed."""
    if t < 1 or n < 1 or y < 0:
        raise DomainError(f"need t >= 1, n >= 1, y >= 0, got t={t}, n={n}, y={y}")
    kappa = float(kappa)
    reg = regime(kappa)
    if reg == SUB:
        s = _h_sum(y, n, kappa)
        if s <= 0:
            raise DomainError(f"leading constant vanishes or is negative at kappa={kappa}")
        log_c = ((2 * n * n - n / 2 + 1) * math.log(2) + math.log(kappa) - n / 2 * math.log(math.pi)
                 + _lf(2 * n - 1) + _log_product(y, n, n - 1) + math.log(s))
        return AsymptoticEstimate(reg, t, 2.0**n, n * (2 * n + 1) / 2, math.exp(log_c))
    if reg == CRIT:
        log_c = ((2 * n * n - 1.5 * n + 1) * math.log(2) - n / 2 * math.log(math.pi)
                 + _log_product(y, n, n))
        return AsymptoticEstimate(reg, t, 2.0**n, n * (2 * n - 1) / 2, math.exp(log_c))
    log_c = ((n - 1) * (4 * n - 5) / 2 * math.log(2) + math.log(kappa)
             + (2 * n - 1) * math.log(kappa - 2) - (n - 1) / 2 * math.log(math.pi)
             - (y / 2 + 2 * n - 1) * math.log(kappa - 1) + _log_product(y, n, n - 1))
    growth = 2.0 ** (n - 1) * kappa / math.sqrt(kappa - 1)
    return AsymptoticEstimate(reg, t, growth, (n - 1) * (2 * n - 1) / 2, math.exp(log_c))


def mean_asym(t: int, y: int, n: int, kappa) -> float:
    """Leading behaviour of the normalized mean number of contacts."""
    kappa = float(kappa)
    reg = regime(kappa)
    if reg == SUB:
        c = kappa * _h_sum(y, n, kappa, extra=1, weighted=True) / _h_sum(y, n, kappa)
        return 1 + c
    if reg == CRIT:
        return (2 ** (0.5 - 2 * n) * n * binom_nat(2 * n, n) * math.sqrt(math.pi * t)
                - 2 * n - y + 2)
    return ((kappa - 2) / (kappa - 1) * t / 2
            + kappa * ((2 - kappa) * y + 4 * n - 2) / (2 * (kappa - 1) * (kappa - 2)) + 1)


# -- convergence harness ----------------------------------------------------------

def _log_rational(v: Fraction) -> float:
    if v <= 0:
        raise DomainError(f"cannot take the log of {v}")
    return math.log(v.numerator) - math.log(v.denominator)


def exact_log_z(t: int, y: int, n: int, kappa) -> float:
    """log Z exactly: product formulas at kappa in {1, 2}, the double sum elsewhere."""
    k = as_rational(kappa) if isinstance(kappa, (int, str, Fraction)) else Fraction(kappa)
    if k == 1:
        return math.log(z_kappa1(t, y, n))
    if k == 2:
        return math.log(z_kappa2(t, y, n))
    return _log_rational(Fraction(z_thm8(t, y, n).evaluate(k)))


@dataclass(frozen=True)
class ReportRow:
    t: int
    log_exact: float
    log_asym: float

    @property
    def ratio(self) -> float:
        return math.exp(self.log_exact - self.log_asym)

    @property
    def error(self) -> float:
        return abs(self.ratio - 1)


@dataclass
class ConvergenceReport:
    y: int
    n: int
    kappa: float
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def shrink_factors(self) -> list[float]:
        return [a.error / b.error if b.error else math.inf for a, b in zip(self.rows, self.rows[1:])]

    @property
    def ok(self) -> bool:
        """False when the error fails to shrink as t grows."""
        return all(f > 1 for f in self.shrink_factors)

    def lines(self) -> list[str]:
        out = [f"# y={self.y} n={self.n} kappa={self.kappa}", "t,log_exact,log_asym,ratio,abs_ratio_minus_1"]
        for r in self.rows:
            out.append(f"{r.t},{r.log_exact:.17g},{r.log_asym:.17g},{r.ratio:.17g},{r.error:.17g}")
        out.append("PASS" if self.ok else "FAIL")
        return out


def convergence_report(y: int, n: int, kappa, t_values) -> ConvergenceReport:
    rep = ConvergenceReport(y, n, float(kappa))
    for t in t_values:
        if (t - y) % 2:
            raise DomainError(f"t={t} and y={y} need equal parity")
        rep.rows.append(ReportRow(t, exact_log_z(t, y, n, kappa),
                                  z_asym_leading(t, y, n, kappa).log_value))
    return rep
