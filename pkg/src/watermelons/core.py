"""Exact arithmetic kernels and the problem-instance types.

Everything here is exact: Python integers and :class:`fractions.Fraction`.
Two binomial conventions are provided because the counting formulas and
the double-sum formula need different behaviour for negative upper
indices (see :func:`binom_nat` and :func:`binom_gen`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


class DomainError(ValueError):
    """An argument lies outside the domain of a formula."""


class NotDivisibleError(ArithmeticError):
    """An exact division left a remainder."""


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational")


# -- binomials, factorials, Pochhammer ---------------------------------------

def binom_nat(m: int, k: int) -> int:
    """C(m, k) for 0 <= k <= m, and 0 otherwise (also for negative m)."""
    if m < 0 or k < 0 or k > m:
        return 0
    return comb(m, k)


def binom_gen(m: int, k: int) -> int:
    """Falling-factorial binomial m(m-1)...(m-k+1)/k!, valid for negative m.

    >>> binom_gen(-1, 1), binom_gen(-2, 0), binom_gen(0, 2)
    (-1, 1, 0)
    """
    if k < 0:
        return 0
    if m >= 0:
        return binom_nat(m, k)
    # (-1)^k C(k-m-1, k)
    return (-1) ** k * comb(k - m - 1, k)


def inv_factorial(m: int) -> Fraction:
    """1/m!, with the reciprocal of a negative factorial taken to be 0."""
    if m < 0:
        return Fraction(0)
    return Fraction(1, factorial(m))


def pochhammer(alpha: Rational, k: int) -> Fraction:
    """Rising factorial alpha(alpha+1)...(alpha+k-1)."""
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    alpha = as_rational(alpha)
    out = Fraction(1)
    for i in range(k):
        out *= alpha + i
    return out


# -- polynomials in the contact fugacity ---------------------------------------

class ContactPolynomial:
    """Polynomial in kappa with integer coefficients, stored sparsely.

    Coefficient of ``kappa**l`` is the number of configurations with ``l``
    contacts when the polynomial is a partition function. Intermediate
    values (determinant entries, cofactors) may carry negative coefficients.
    Instances are immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise ValueError(f"non-integral coefficient {v} at kappa^{e}")
                v = v.numerator
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: c[e] for e in sorted(c) if c[e]}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "ContactPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def zero(cls) -> "ContactPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "ContactPolynomial":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __iter__(self):
        return iter(self._c.items())

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else -1

    @property
    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient (None for 0)."""
        return min(self._c) if self._c else None

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ContactPolynomial({0: other})
        if not isinstance(other, ContactPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self._c.items()))

    def __repr__(self) -> str:
        return f"ContactPolynomial({self._c})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, v in self._c.items():
            mono = "" if e == 0 else ("k" if e == 1 else f"k^{e}")
            if not mono:
                terms.append(str(v))
            elif v == 1:
                terms.append(mono)
            else:
                terms.append(f"{v}*{mono}")
        return " + ".join(terms)

    def __add__(self, other: "ContactPolynomial") -> "ContactPolynomial":
        if isinstance(other, int):
            other = ContactPolynomial({0: other})
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return ContactPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "ContactPolynomial":
        return ContactPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "ContactPolynomial") -> "ContactPolynomial":
        if isinstance(other, int):
            other = ContactPolynomial({0: other})
        return self + (-other)

    def __mul__(self, other) -> "ContactPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return ContactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ContactPolynomial":
        out = ContactPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> "ContactPolynomial":
        return ContactPolynomial({e: c * v for e, v in self._c.items()})

    def __call__(self, kappa):
        return self.evaluate(kappa)

    def evaluate(self, kappa):
        """Horner evaluation; exact for int/Fraction/"p/q", floating for floats."""
        if isinstance(kappa, str):
            kappa = as_rational(kappa)
        if not self._c:
            return 0 * kappa
        acc = 0
        prev = self.degree
        for e in sorted(self._c, reverse=True):
            acc = acc * kappa ** (prev - e) + self._c[e]
            prev = e
        return acc * kappa ** prev

    def derivative(self) -> "ContactPolynomial":
        return ContactPolynomial({e - 1: e * v for e, v in self._c.items() if e})

    def shift_down(self, m: int) -> "ContactPolynomial":
        """Divide by kappa**m; raises if the valuation is below m."""
        if m < 0:
            raise DomainError(f"shift must be >= 0, got {m}")
        if self._c and min(self._c) < m:
            raise NotDivisibleError(
                f"{self} is not divisible by kappa^{m}"
            )
        return ContactPolynomial({e - m: v for e, v in self._c.items()})

    def exact_div(self, divisor: "ContactPolynomial") -> "ContactPolynomial":
        """Quotient in Z[kappa]; raises when divisor does not divide self."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        dd = divisor.degree
        lead = divisor._c[dd]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dd:
                break
            q, r = divmod(rem[top], lead)
            if r:
                break
            shift = top - dd
            quot[shift] = q
            for e, v in divisor._c.items():
                k = e + shift
                nv = rem.get(k, 0) - q * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise NotDivisibleError(f"{divisor} does not divide {self}")
        return ContactPolynomial(quot)


KAPPA = ContactPolynomial.monomial(1)


def poly_add(p: ContactPolynomial, q: ContactPolynomial) -> ContactPolynomial:
    return p + q


def poly_mul(p: ContactPolynomial, q: ContactPolynomial) -> ContactPolynomial:
    return p * q


def poly_scale(p: ContactPolynomial, c: int) -> ContactPolynomial:
    return p.scale(c)


def poly_eval(p: ContactPolynomial, kappa):
    return p.evaluate(kappa)


def poly_divide_exact_by_kappa_power(p: ContactPolynomial, m: int) -> ContactPolynomial:
    return p.shift_down(m)


def polynomial_from_fractions(coeffs: Mapping[int, Fraction], *, what: str = "") -> ContactPolynomial:
    """Build a partition function from rational coefficients.

    Every coefficient must be a nonnegative integer; anything else means the
    formula that produced it was mis-implemented.
    """
    out = {}
    for e, v in coeffs.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise ArithmeticError(f"{what}: non-integral coefficient {v} at kappa^{e}")
        if v < 0:
            raise ArithmeticError(f"{what}: negative coefficient {v} at kappa^{e}")
        out[e] = v.numerator
    return ContactPolynomial(out)


# -- instances --------------------------------------------------------------

@dataclass(frozen=True)
class WalkerSpec:
    """n walkers of length t, walker i running from height a[i] to e[i]."""

    n: int
    t: int
    a: tuple[int, ...]
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "e", tuple(self.e))
        if self.n < 1:
            raise DomainError(f"need at least one walker, got n={self.n}")
        if self.t < 0:
            raise DomainError(f"walk length must be >= 0, got t={self.t}")
        if len(self.a) != self.n or len(self.e) != self.n:
            raise DomainError("start/end height lists must have length n")
        for name, hs in (("a", self.a), ("e", self.e)):
            if any(h < 0 for h in hs):
                raise DomainError(f"{name} has a negative height: {hs}")
            if any(h1 >= h2 for h1, h2 in zip(hs, hs[1:])):
                raise DomainError(f"{name} must be strictly increasing: {hs}")
            if len({h % 2 for h in hs}) > 1:
                raise DomainError(f"{name} heights must share one parity: {hs}")
        if any((ai + ei - self.t) % 2 for ai, ei in zip(self.a, self.e)):
            raise DomainError("a_i + e_i must have the parity of t")


@dataclass(frozen=True)
class WatermelonSpec:
    """Watermelon of n walkers starting on the wall and ending at deviation y."""

    n: int
    t: int
    y: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"need at least one walker, got n={self.n}")
        if self.y < 0 or self.t < self.y:
            raise DomainError(f"need 0 <= y <= t, got t={self.t}, y={self.y}")
        if (self.t - self.y) % 2:
            raise DomainError(f"t and y must have equal parity, got t={self.t}, y={self.y}")

    @property
    def downs(self) -> int:
        """Down-steps per walker, (t - y)/2."""
        return (self.t - self.y) // 2

    def walker_spec(self) -> WalkerSpec:
        return WalkerSpec(
            self.n,
            self.t,
            tuple(2 * i for i in range(self.n)),
            tuple(self.y + 2 * i for i in range(self.n)),
        )
