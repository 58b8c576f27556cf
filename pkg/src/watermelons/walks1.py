"""One walker above the wall: reflection-principle formula and Catalan-power route."""
from __future__ import annotations

from .core import ContactPolynomial, DomainError, binom_nat


def _check_parity(t: int, a: int, e: int) -> None:
    if t < 0 or a < 0 or e < 0:
        raise DomainError(f"need t, a, e >= 0, got {(t, a, e)}")
    if (t + a + e) % 2:
        raise DomainError(f"a + e must have the parity of t, got t={t}, a={a}, e={e}")


def paths_above_axis(t: int, a: int, e: int) -> int:
    """Walks (0,a) -> (t,e) that never touch height 0 (reflection principle)."""
    _check_parity(t, a, e)
    if a < 1 or e < 1:
        raise DomainError("endpoints must lie strictly above the wall")
    return binom_nat(t, (t + a - e) // 2) - binom_nat(t, (t - a - e) // 2)


def z1_exact(t: int, a: int, e: int) -> ContactPolynomial:
    """Contact polynomial of a single walker (0,a) -> (t,e).

    The closed form assumes t >= 1; t = 0 is the trivial one-point walk.
    """
    _check_parity(t, a, e)
    if t == 0:
        return ContactPolynomial.monomial(1 if a == 0 else 0) if a == e else ContactPolynomial()
    coeffs = {0: binom_nat(t, (t + a - e) // 2) - binom_nat(t, (t - a - e) // 2)}
    for ell in range(1, max(0, (t - a - e) // 2 + 1) + 1):
        coeffs[ell] = (binom_nat(t - ell, (t + a + e - 2) // 2)
                       - binom_nat(t - ell, (t + a + e) // 2))
    return ContactPolynomial(coeffs)


def catalan_power_coeff(m: int, r: int) -> int:
    """Coefficient of x^r in C(x)^(m+1), C the Catalan generating function.

    m = -1 (the zeroth power) is accepted since the contact series needs it.
    """
    if r < 0:
        return 0
    if m == -1:
        return 1 if r == 0 else 0
    if m < -1:
        raise DomainError(f"exponent m+1 must be >= 0, got m={m}")
    return binom_nat(2 * r + m, r) - binom_nat(2 * r + m, r - 1)


def _half(k: int) -> int | None:
    return k // 2 if k >= 0 and k % 2 == 0 else None


def z1_gf(a: int, e: int, up_to_t: int) -> dict[int, ContactPolynomial]:
    """Single-walker polynomials for all admissible t <= up_to_t via Catalan powers.

    Requires a <= e; the problem is symmetric, so callers swap otherwise.
    """
    if a > e:
        raise DomainError(f"need a <= e (swap the endpoints), got a={a}, e={e}")
    if a < 0 or up_to_t < 0:
        raise DomainError("need a >= 0 and up_to_t >= 0")
    out = {}
    for t in range((a + e) % 2, up_to_t + 1, 2):
        coeffs = {}
        # walks that avoid the wall: sum over the telescoped reflections
        c0 = 0
        for j in range(a):
            r = _half(t - 2 * j - e + a)
            if r is not None:
                c0 += catalan_power_coeff(2 * j + e - a, r)
        coeffs[0] = c0
        for ell in range(1, t + 2):
            r = _half(t - 2 * ell - a - e + 2)
            if r is not None:
                coeffs[ell] = catalan_power_coeff(ell + a + e - 2, r)
        out[t] = ContactPolynomial(coeffs)
    return out


def central_binomial_series_coeff(m: int, r: int) -> int:
    """Coefficient of x^r in C(x)^(m+1) / (1 - x C(x)^2), accumulated over Catalan powers.

    Should equal binom(2r+m, r); kept separate so the identity can be tested.
    """
    return sum(catalan_power_coeff(m + 2 * s, r - s) for s in range(r + 1))
