from fractions import Fraction

import pytest

from watermelons.core import ContactPolynomial as P, DomainError
from watermelons.formulas import (
    KAPPA_MIN,
    thm11_finite_part,
    z_cor5,
    z_kappa1,
    z_kappa2,
    z_thm4,
    z_thm8,
    z_thm9,
    z_thm11,
)
from watermelons.lgv import z_det_deviation0
from watermelons.oracle import enumerate_contact_polynomial
from watermelons.core import WatermelonSpec

from conftest import watermelon_grid

ANCHOR = P({2: 1, 3: 2})
SERIES_KAPPAS = [0.9, 1, 1.5, 1.99, 2, 2.01, 3, 10]
# 1e-12 would need more than the 10^6-term cap next to kappa = 2
SERIES_TOL = 1e-10


def test_thm4_examples():
    assert z_thm4(2, 2) == ANCHOR
    assert z_thm4(1, 1) == P({2: 1})
    assert z_thm4(2, 1) == P({2: 1, 3: 1})


def test_thm8_examples():
    assert z_thm8(3, 1, 1) == P({1: 1, 2: 1})
    assert z_thm8(4, 0, 2) == ANCHOR
    for y in range(2, 9):
        assert z_thm8(y, y, 1) == P({1: 1})


def test_thm8_domain():
    with pytest.raises(DomainError):
        z_thm8(0, 0, 1)
    with pytest.raises(DomainError):
        z_thm8(3, 0, 1)


def test_thm9_examples():
    assert z_thm9(2, 0, 1) == ({0: 1, 1: 1}, P({2: 1}))
    assert z_thm9(4, 0, 2)[1] == ANCHOR
    assert z_thm9(5, 5, 3) == ({0: 1}, P({1: 1}))


def test_kappa_products_examples():
    assert z_kappa1(4, 0, 2) == 3
    assert z_kappa1(4, 0, 1) == 2
    assert z_kappa1(7, 7, 3) == 1
    assert z_kappa2(4, 0, 2) == 20
    assert z_kappa2(2, 0, 1) == 4
    assert z_kappa2(7, 7, 3) == 2


@pytest.mark.parametrize("n,t,y", list(watermelon_grid(3, 12, 4)))
def test_exact_routes_agree(n, t, y):
    oracle = enumerate_contact_polynomial(WatermelonSpec(n, t, y))
    coeffs, assembled = z_thm9(t, y, n)
    assert z_thm8(t, y, n) == assembled == oracle
    assert all(isinstance(v, int) and v >= 0 for v in coeffs.values())
    assert oracle.evaluate(1) == z_kappa1(t, y, n)
    assert oracle.evaluate(2) == z_kappa2(t, y, n)


def test_thm4_web():
    for r in range(1, 7):
        for n in range(1, 4):
            assert z_thm4(r, n) == z_thm8(2 * r, 0, n) == z_det_deviation0(r, n)


def test_cor5_examples():
    assert z_cor5(2, 2, 1) == pytest.approx(3, rel=1e-12)
    assert z_cor5(2, 2, 2) == 20
    assert z_cor5(2, 2, 3, 1e-10) == pytest.approx(float(ANCHOR.evaluate(3)), rel=1e-8)


def test_thm11_examples():
    assert z_thm11(4, 0, 2, 1.5, 1e-10) == pytest.approx(9, rel=1e-8)
    assert z_thm11(3, 1, 1, 3, 1e-10) == pytest.approx(12, rel=1e-8)
    assert z_thm11(4, 0, 2, 1) == pytest.approx(3, rel=1e-12)


def test_series_domain():
    for f in (lambda: z_cor5(2, 2, KAPPA_MIN), lambda: z_thm11(4, 0, 2, 0.5)):
        with pytest.raises(DomainError):
            f()


def _rel(a, b):
    return abs(a - b) / abs(b)


@pytest.mark.parametrize("kappa", SERIES_KAPPAS)
def test_series_match_exact(kappa):
    k = Fraction(kappa)
    worst = 0.0
    for n in (1, 2):
        for y in range(13):
            for t in range(max(y, 1), 13):
                if (t - y) % 2 or t + y < 2:
                    continue
                exact = float(z_thm8(t, y, n).evaluate(k))
                worst = max(worst, _rel(z_thm11(t, y, n, kappa, SERIES_TOL), exact))
        for r in range(1, 7):
            exact = float(z_thm4(r, n).evaluate(k))
            worst = max(worst, _rel(z_cor5(r, n, kappa, SERIES_TOL), exact))
    assert worst <= 1e-8


def test_printed_finite_part_only_fails_for_y_at_least_2():
    # the finite term as printed carries extra Laurent terms in kappa - 1 once y >= 2
    k = Fraction(3)
    for y in (0, 1):
        assert thm11_finite_part(8 + y, y, 2, k, drop_band=False) == thm11_finite_part(8 + y, y, 2, k)
    assert thm11_finite_part(8, 2, 2, k, drop_band=False) != thm11_finite_part(8, 2, 2, k)
    printed = z_thm11(8, 2, 2, 3.0, SERIES_TOL, drop_band=False)
    assert _rel(printed, float(z_thm8(8, 2, 2).evaluate(k))) > 1e-3
