from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from watermelons.core import (
    ContactPolynomial,
    DomainError,
    NotDivisibleError,
    WalkerSpec,
    WatermelonSpec,
    as_rational,
    binom_gen,
    binom_nat,
    pochhammer,
    poly_divide_exact_by_kappa_power,
    poly_eval,
    polynomial_from_fractions,
)

P = ContactPolynomial


@pytest.mark.parametrize("m,k,want", [(4, 2, 6), (-1, 0, 0), (3, 5, 0)])
def test_binom_nat(m, k, want):
    assert binom_nat(m, k) == want


@pytest.mark.parametrize("m,k,want", [(-1, 0, 1), (-1, 1, -1), (0, 2, 0), (-3, 2, 6), (5, -1, 0)])
def test_binom_gen(m, k, want):
    assert binom_gen(m, k) == want


@given(st.integers(0, 40), st.integers(-3, 45))
def test_binomial_conventions_agree_for_natural_m(m, k):
    assert binom_nat(m, k) == binom_gen(m, k)


@pytest.mark.parametrize("alpha,k,want", [(3, 0, 1), (2, 3, 24), (Fraction(1, 2), 2, Fraction(3, 4))])
def test_pochhammer(alpha, k, want):
    assert pochhammer(alpha, k) == want


def test_pochhammer_negative_k():
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_poly_eval_examples():
    p = P({2: 1, 3: 2})
    assert poly_eval(p, 1) == 3
    assert poly_eval(p, 2) == 20
    assert poly_eval(P(), Fraction(7, 3)) == 0
    assert p.evaluate("1/2") == Fraction(1, 4) + Fraction(2, 8)


def test_divide_by_kappa_power():
    assert poly_divide_exact_by_kappa_power(P({3: 1, 4: 1}), 2) == P({1: 1, 2: 1})
    assert poly_divide_exact_by_kappa_power(P({2: 1}), 0) == P({2: 1})
    with pytest.raises(NotDivisibleError):
        poly_divide_exact_by_kappa_power(P({1: 1}), 2)


def test_exact_div():
    a, b = P({0: 1, 1: 2}), P({1: 3, 2: -1})
    assert (a * b).exact_div(b) == a
    with pytest.raises(NotDivisibleError):
        P({0: 1}).exact_div(P({0: 2}))


def test_str_and_derivative():
    p = P({2: 1, 3: 2})
    assert str(p) == "k^2 + 2*k^3"
    assert p.derivative() == P({1: 2, 2: 6})
    assert str(P()) == "0"


def test_from_fractions_rejects_non_counts():
    with pytest.raises(ArithmeticError):
        polynomial_from_fractions({1: Fraction(1, 2)})
    with pytest.raises(ArithmeticError):
        polynomial_from_fractions({1: -1})
    assert polynomial_from_fractions({1: Fraction(4, 2)}) == P({1: 2})


def test_as_rational():
    assert as_rational("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)


polys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5).map(P)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == P()


@given(polys, st.fractions(max_denominator=50))
def test_evaluation_is_a_homomorphism(a, k):
    b = P({0: 1, 2: -3})
    assert (a * b).evaluate(k) == a.evaluate(k) * b.evaluate(k)


def test_specs_validate():
    WalkerSpec(2, 4, (0, 2), (0, 2))
    for bad in [dict(n=2, t=4, a=(2, 0), e=(0, 2)), dict(n=1, t=3, a=(0,), e=(0,)),
                dict(n=2, t=4, a=(0, 1), e=(0, 1))]:
        with pytest.raises(DomainError):
            WalkerSpec(**bad)
    with pytest.raises(DomainError):
        WatermelonSpec(1, 3, 0)
    with pytest.raises(DomainError):
        WatermelonSpec(1, 2, 4)
    assert WatermelonSpec(3, 6, 2).walker_spec() == WalkerSpec(3, 6, (0, 2, 4), (2, 4, 6))
