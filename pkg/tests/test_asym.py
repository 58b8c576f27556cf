import math

import pytest

from watermelons.asym import (
    CRIT,
    SUB,
    SUPER,
    convergence_report,
    mean_asym,
    regime,
    z_asym_leading,
)
from watermelons.core import DomainError
from watermelons.stats import mean_kappa1


def test_regimes():
    assert [regime(k) for k in (0.5, 2, 2.5)] == [SUB, CRIT, SUPER]
    with pytest.raises(DomainError):
        regime(0)


@pytest.mark.parametrize("kappa,const,exponent,growth", [
    (1, 2**1.5 / math.sqrt(math.pi), 1.5, 2),
    (2, 2**1.5 / math.sqrt(math.pi), 0.5, 2),
    (3, 1.5, 0, 3 / math.sqrt(2)),
])
def test_single_walker_leading_terms(kappa, const, exponent, growth):
    est = z_asym_leading(100, 0, 1, kappa)
    assert est.constant == pytest.approx(const, rel=1e-12)
    assert est.critical_exponent == exponent
    assert est.growth_rate == pytest.approx(growth, rel=1e-15)
    assert est.value == pytest.approx(const * growth**100 * 100**-exponent, rel=1e-10)


def test_value_overflow_is_inf():
    est = z_asym_leading(4000, 0, 2, 1)
    assert est.value == math.inf and est.log_value > 700


def test_mean_examples():
    assert mean_asym(10, 0, 1, 1) == pytest.approx(4)
    assert mean_asym(300, 0, 1, 2) == pytest.approx(math.sqrt(math.pi * 150))
    assert mean_asym(40, 0, 1, 3) == pytest.approx(40 / 4 + 2.5)


def test_subcritical_mean_is_limit_of_kappa1_mean():
    for n in (1, 2, 3):
        for y in (0, 1, 2):
            t = 10**6 + y
            assert float(mean_kappa1(t, y, n)) == pytest.approx(mean_asym(t, y, n, 1), rel=1e-4)


@pytest.mark.parametrize("y,n,kappa,ts", [(0, 1, 1, (100, 200, 400)), (0, 2, 2, (100, 200, 400)),
                                          (0, 2, 3, (50, 100, 200))])
def test_report_halves(y, n, kappa, ts):
    rep = convergence_report(y, n, kappa, ts)
    assert rep.ok
    assert all(1.6 <= f <= 2.4 for f in rep.shrink_factors)
    assert rep.lines()[-1] == "PASS"
