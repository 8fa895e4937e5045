"""Closed forms for the run-count weights: the polynomial families behind

    P(n, s) = sum_{i=0}^{s-1} psi_i(n, s) * (s - i)^n.

Everything is assembled from three building blocks:

    a_k(n)   half-integer binomial polynomial, degree k in n
    b_m(t)   Catalan-like rational sequence, extended to a degree-m polynomial
    p_j(n,t) their convolution sum_{k<=j} a_k(n) * b_{j-k}(t)

The weight psi_i(n, s) factors as K(s-i) * Q_i(n, s) with K(s) = 2^(2-s);
the non-polynomial prefactor K is kept out of every stored object and only
reattached at evaluation time, which is also how the polynomials are usually
displayed.  Q_i has degree exactly floor(i/2) in n.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .poly import (
    BivariatePolynomial,
    Polynomial,
    TruncatedSeries,
    binom_poly_in_n,
    binom_rational,
)


class NonIntegerResultError(ArithmeticError):
    """The closed-form sum failed to collapse to a nonnegative integer."""


def K(s: int) -> Fraction:
    """The prefactor 2^(2-s), exact for any integer s."""
    if s >= 2:
        return Fraction(1, 2 ** (s - 2))
    return Fraction(2 ** (2 - s))


@lru_cache(maxsize=None)
def a_poly(k: int) -> Polynomial:
    """a_k as a degree-k polynomial in n: the (n-3)/2-choose-k column, signed."""
    return binom_poly_in_n(Fraction(-3, 2), Fraction(1, 2), k) * (-1) ** k


def a_value(k: int, n: int) -> Fraction:
    return binom_rational(Fraction(n - 3, 2), k) * (-1) ** k


def b_value(m: int, t: int) -> Fraction:
    """b_m(t) = t*(2m+t-1)! / (m!*(m+t)!*4^m) for integer t >= 1."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if t < 1:
        raise ValueError("t must be >= 1")
    return Fraction(
        t * factorial(2 * m + t - 1), factorial(m) * factorial(m + t) * 4**m
    )


@lru_cache(maxsize=None)
def b_poly(m: int) -> Polynomial:
    """The unique degree-m polynomial in t agreeing with b_value at t >= 1.

    For m >= 1 the factorial quotient collapses to a rising product:
    b_m(t) = t * (t+m+1)(t+m+2)***(t+2m-1) / (m! * 4^m).  For m = 0 the
    quotient is 1/t and the polynomial is the constant 1.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Polynomial.constant("t", 1)
    acc = Polynomial("t", [0, 1])
    for j in range(m + 1, 2 * m):
        acc = acc * Polynomial("t", [j, 1])
    return acc * Fraction(1, factorial(m) * 4**m)


NT_VARS = ("n", "t")


@lru_cache(maxsize=None)
def p_poly(j: int) -> BivariatePolynomial:
    """p_j(n, t) = sum_{k=0}^{j} a_k(n) b_{j-k}(t), degree j in each variable."""
    if j < 0:
        raise ValueError("j must be >= 0")
    total = BivariatePolynomial(NT_VARS)
    for k in range(j + 1):
        an = BivariatePolynomial.from_univariate(a_poly(k), 0, NT_VARS)
        bt = BivariatePolynomial.from_univariate(b_poly(j - k), 1, NT_VARS)
        total = total + an * bt
    return total


def p_value(j: int, n: int, t: int) -> Fraction:
    """p_j(n, t) at integer arguments, straight from the defining sum."""
    return sum((a_value(k, n) * b_value(j - k, t) for k in range(j + 1)), Fraction(0))


def g_coefficient(i: int, j: int) -> int:
    """The selector g_{i,j} in {1, 0, -2} picking p_j terms for index i."""
    if i % 2 == 0:
        return int(j == i // 2) + int(j == i // 2 - 1)
    return -2 * int(j == (i - 1) // 2)


def phi_polys(i_max: int) -> list[BivariatePolynomial]:
    """Polynomial parts of phi_i(n, t), the common K(t) factor omitted.

    part(phi_{2j}) = p_j + p_{j-1} and part(phi_{2j+1}) = -2*p_j, with the
    convention p_{-1} = 0.
    """
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    parts = []
    for i in range(i_max + 1):
        j = i // 2
        if i % 2 == 0:
            part = p_poly(j) + (p_poly(j - 1) if j >= 1 else 0)
        else:
            part = p_poly(j) * (-2)
        parts.append(part)
    return parts


@dataclasses.dataclass(frozen=True)
class PsiPolynomial:
    """psi_i(n, s) = K(s - i) * part(n, s); only the polynomial part is stored."""

    index: int
    part: BivariatePolynomial  # variables (n, s)

    def evaluate(self, n: int, s: int) -> Fraction:
        return K(s - self.index) * self.part.evaluate(n, s)


def psi_polys(i_max: int) -> list[PsiPolynomial]:
    """The weights Q_i(n, s): phi parts reparametrized by t -> s - i."""
    return [
        PsiPolynomial(index=i, part=part.substitute_linear(1, 1, -i, new_name="s"))
        for i, part in enumerate(phi_polys(i_max))
    ]


def p_closed_form(n: int, s: int) -> int:
    """P(n, s) by the explicit formula, exactly.

    P(n, s) = sum_{i=0}^{s-1} K(s-i) (s-i)^n sum_{j=0}^{floor(i/2)} g_{i,j} p_j(n, s-i)
    for n-1 >= s >= 1; outside that range the count is 0 by convention.
    Raises NonIntegerResultError if the rational sum fails to collapse to a
    nonnegative integer, which would mean a broken identity.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if s < 1 or s > n - 1:
        return 0
    total = Fraction(0)
    for i in range(s):
        t = s - i
        inner = Fraction(0)
        for j in range(i // 2 + 1):
            g = g_coefficient(i, j)
            if g:
                inner += g * p_value(j, n, t)
        total += K(t) * t**n * inner
    if total.denominator != 1 or total < 0:
        raise NonIntegerResultError(f"P({n},{s}) evaluated to {total}")
    return int(total)


def phi_generating_series(n: int, t: int, order: int) -> TruncatedSeries:
    """The series sum_i phi_i(n, t) x^i, assembled from its closed form.

    Equals K(t) * (1-x)^2 * [sum_k a_k(n) x^(2k)] * [sum_m b_m(t) x^(2m)];
    the x^i coefficient must reproduce K(t) * part(phi_i)(n, t).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    a_coeffs = [Fraction(0)] * (order + 1)
    b_coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        a_coeffs[2 * k] = a_value(k, n)
        b_coeffs[2 * k] = b_value(k, t)
    series = TruncatedSeries("x", order, a_coeffs) * TruncatedSeries("x", order, b_coeffs)
    return series * Polynomial("x", [1, -1]) ** 2 * K(t)
