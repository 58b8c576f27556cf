"""Determinant routes for non-intersecting walkers.

Each partition function here is the determinant of a matrix of
single-walker quantities: the general start/end problem, the two
watermelon variants with prepended (and appended) forced steps, and the
integer determinant counting watermelons with a fixed number of contacts.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence, TypeVar

from .core import (
    ContactPolynomial,
    DomainError,
    WalkerSpec,
    WatermelonSpec,
    binom_nat,
    inv_factorial,
)
from .walks1 import z1_exact

T = TypeVar("T")

LAPLACE_MAX = 4


def _laplace(m: Sequence[Sequence[T]], zero: T) -> T:
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix handled by caller")
    if n == 1:
        return m[0][0]
    total = zero
    for j in range(n):
        entry = m[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = entry * _laplace(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss(m: Sequence[Sequence[T]], zero: T, one: T, div: Callable[[T, T], T]) -> T:
    """Fraction-free elimination; every division is exact."""
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else zero - det


def det_polynomial(matrix: Sequence[Sequence[ContactPolynomial]]) -> ContactPolynomial:
    """Exact determinant over Z[kappa]; the 0x0 determinant is 1."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("matrix must be square")
    if n == 0:
        return ContactPolynomial.one()
    if n <= LAPLACE_MAX:
        return _laplace(matrix, ContactPolynomial.zero())
    return _bareiss(matrix, ContactPolynomial.zero(), ContactPolynomial.one(),
                    lambda p, q: p.exact_div(q))


def det_integer(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    if n <= LAPLACE_MAX:
        return _laplace(matrix, 0)

    def div(p: int, q: int) -> int:
        d, r = divmod(p, q)
        assert r == 0, "Bareiss division must be exact"
        return d

    return _bareiss(matrix, 0, 1, div)


def z_det_general(spec: WalkerSpec) -> ContactPolynomial:
    """Determinant of single-walker partition functions, entry (i,j) = Z1(a_j -> e_i)."""
    n = spec.n
    matrix = [[z1_exact(spec.t, spec.a[j], spec.e[i]) for j in range(n)] for i in range(n)]
    return det_polynomial(matrix)


def _b_entry(t: int, y: int, i: int, j: int) -> ContactPolynomial:
    half = (t + y) // 2
    top = (t - y) // 2 + j - i + 1
    return ContactPolynomial({
        ell: binom_nat(t + 2 * j - ell, half + i + j - 1) - binom_nat(t + 2 * j - ell, half + i + j)
        for ell in range(1, top + 1)
    })


def z_det_watermelon(t: int, y: int, n: int) -> ContactPolynomial:
    """Watermelon partition function from the prepended-steps determinant."""
    WatermelonSpec(n, t, y)
    if t < 1:
        raise DomainError("determinant route needs t >= 1")
    matrix = [[_b_entry(t, y, i, j) for j in range(n)] for i in range(n)]
    return det_polynomial(matrix).shift_down(n - 1)


def c_entry(r: int) -> ContactPolynomial:
    """Single Dyck-type walk 0 -> 0 of length 2r, written as a polynomial."""
    return ContactPolynomial({
        ell: binom_nat(2 * r - ell, r - 1) - binom_nat(2 * r - ell, r)
        for ell in range(2, r + 2)
    })


def z_det_deviation0(r: int, n: int) -> ContactPolynomial:
    """Deviation-0 watermelon from the Hankel determinant of c_entry values."""
    if r < 1 or n < 1:
        raise DomainError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    matrix = [[c_entry(r + i + j) for j in range(n)] for i in range(n)]
    return det_polynomial(matrix).shift_down(2 * n - 2)


def _check_ell(t: int, y: int, n: int, ell: int) -> WatermelonSpec:
    spec = WatermelonSpec(n, t, y)
    if t < 1:
        raise DomainError("need t >= 1")
    if not 0 <= ell <= spec.downs:
        raise DomainError(f"need 0 <= ell <= (t-y)/2 = {spec.downs}, got {ell}")
    return spec


def n_fixed_contacts(t: int, y: int, n: int, ell: int) -> int:
    """Watermelons whose first walk has ell + 1 contacts, as a single alternating sum."""
    _check_ell(t, y, n, ell)
    a, b = (t + y) // 2, (t - y) // 2
    pre = Fraction(1)
    for i in range(n):
        pre *= Fraction(factorial(t + 2 * i) * factorial(i),
                        factorial(a + n + i - 1) * factorial(b + i))
    for i in range(n - 1):
        pre *= Fraction(factorial(y + n + i - 1), factorial(y + 2 * i))
    total = Fraction(0)
    for k in range(n):
        term = (Fraction((-1) ** (n - k - 1) * (y + 2 * n + ell - 2)
                         * factorial(t + 2 * k - ell - 1) * factorial(b + k),
                         factorial(t + 2 * k) * factorial(k) * factorial(n - k - 1))
                * inv_factorial(b + k - n - ell + 1))
        total += term
    value = pre * total
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"fixed-contact count is not a count: {value}")
    return value.numerator


def _ballot(num: int, den: int, top: int, bottom: int) -> Fraction:
    return Fraction(num, den) * binom_nat(top, bottom)


def det_6_1(t: int, y: int, n: int, ell: int) -> int:
    """Same count as :func:`n_fixed_contacts`, from the integer LGV determinant."""
    _check_ell(t, y, n, ell)
    half = (t + y) // 2
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i < n:
                v = _ballot(y + 2 * i - 1, half + i + j - 1, t + 2 * j - 2, half + i + j - 2)
            else:
                v = _ballot(y + 2 * n + ell - 2, half + n + j - 2,
                            t + 2 * j - ell - 3, half + n + j - 3)
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral path count {v} at ({i},{j})")
            row.append(v.numerator)
        rows.append(row)
    return det_integer(rows)
