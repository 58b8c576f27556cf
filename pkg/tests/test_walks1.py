import pytest
from hypothesis import given, strategies as st

from watermelons.core import ContactPolynomial as P, DomainError, WalkerSpec, binom_nat
from watermelons.oracle import enumerate_contact_polynomial
from watermelons.walks1 import (
    catalan_power_coeff,
    central_binomial_series_coeff,
    paths_above_axis,
    z1_exact,
    z1_gf,
)


@pytest.mark.parametrize("args,want", [((2, 1, 1), 1), ((2, 1, 3), 1), ((4, 2, 2), 5)])
def test_paths_above_axis(args, want):
    assert paths_above_axis(*args) == want


def test_paths_above_axis_parity():
    with pytest.raises(DomainError):
        paths_above_axis(3, 1, 1)


@pytest.mark.parametrize("args,want", [((2, 1, 1), P({0: 1, 1: 1})), ((2, 0, 0), P({2: 1})),
                                       ((3, 0, 1), P({1: 1, 2: 1}))])
def test_z1_exact_examples(args, want):
    assert z1_exact(*args) == want


@pytest.mark.parametrize("args,want", [((5, 0), 1), ((0, 3), 5), ((2, 1), 3)])
def test_catalan_power_coeff(args, want):
    assert catalan_power_coeff(*args) == want


def test_z1_gf_examples():
    assert z1_gf(1, 1, 2)[2] == P({0: 1, 1: 1})
    assert z1_gf(0, 0, 4)[4] == P({2: 1, 3: 1})
    assert z1_gf(0, 2, 2)[2] == P({1: 1})
    with pytest.raises(DomainError):
        z1_gf(2, 0, 4)


def test_single_walker_routes_agree():
    for a in range(5):
        for e in range(a, 5):
            gf = z1_gf(a, e, 14)
            for t in range((a + e) % 2, 15, 2):
                oracle = enumerate_contact_polynomial(WalkerSpec(1, t, (a,), (e,)))
                assert gf[t] == z1_exact(t, a, e) == oracle, (a, e, t)


@given(st.integers(0, 30), st.integers(0, 8), st.integers(0, 8))
def test_symmetry(t, a, e):
    if (t + a + e) % 2:
        t += 1
    assert z1_exact(t, a, e) == z1_exact(t, e, a)


@given(st.integers(1, 30), st.integers(0, 8))
def test_first_step_from_wall_is_up(t, e):
    if (t + e) % 2:
        t += 1
    assert z1_exact(t, 0, e) == P({1: 1}) * z1_exact(t - 1, 1, e)


@given(st.integers(0, 25), st.integers(0, 25))
def test_catalan_power_closed_form(m, r):
    # ((m+1)/(r+m+1)) binom(2r+m, r)
    assert catalan_power_coeff(m, r) * (r + m + 1) == (m + 1) * binom_nat(2 * r + m, r)


@given(st.integers(0, 20), st.integers(0, 20))
def test_central_binomial_identity(m, r):
    assert central_binomial_series_coeff(m, r) == binom_nat(2 * r + m, r)
