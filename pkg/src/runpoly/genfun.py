"""Rational generating functions for the run counts.

Two families live here, both with structured denominators of the form
prod (1 - c*x)^e:

    A_k(z) = PhiTilde_k(z) / (1-z)^(k+1)   = sum_{n>=2} a_k(n) z^n
    u_s(x) = Phi_s(x) / Delta_s(x)         = sum_{n>=2} P(n,s) x^n

A_k is obtained from the degree-(2k+1) polynomial ATilde_k(z), which carries
a (1+z)^(k+1) factor; dividing it out and re-expanding around z = -1 gives
the Taylor coefficients atilde_k(p) and the reduced numerator PhiTilde_k of
degree k+2.  The atilde coefficients are computed by two independent routes
(closed formula and exact division + Taylor shift) which must agree.

u_s is assembled from partial-fraction blocks B_{i,k}(x, s-i)/(1-(s-i)x)^(k+1)
and cleared over the common denominator Delta_s to yield Phi_s, a polynomial
of degree exactly 1 + ceil(s(s+2)/4).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from math import comb

from .closedform import K, b_value, g_coefficient
from .poly import Polynomial, TruncatedSeries, binom_rational, series_reciprocal


class DegreeMismatchError(ArithmeticError):
    """A constructed polynomial missed its predicted degree."""


class DualPathMismatchError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


@dataclasses.dataclass(frozen=True)
class RationalGF:
    """A rational generating function numerator / prod (1 - c*x)^e.

    The denominator is kept factored as (parameter c, multiplicity e) pairs
    with distinct parameters.  An optional partial-fraction form holds terms
    B(x)/(1 - c*x)^e; clearing its denominators must reproduce the
    numerator/denominator pair exactly (see check_partial_fractions).
    """

    numerator: Polynomial
    denominator_factors: tuple[tuple[Fraction, int], ...]
    partial_fractions: tuple[tuple[Polynomial, Fraction, int], ...] | None = None

    def __post_init__(self):
        params = [c for c, _ in self.denominator_factors]
        if len(set(params)) != len(params):
            raise ValueError("denominator parameters must be distinct")
        if any(e < 1 for _, e in self.denominator_factors):
            raise ValueError("denominator multiplicities must be >= 1")

    @property
    def var(self) -> str:
        return self.numerator.var

    def denominator(self) -> Polynomial:
        prod = Polynomial.constant(self.var, 1)
        for c, e in self.denominator_factors:
            prod = prod * Polynomial(self.var, [1, -c]) ** e
        return prod

    def series(self, order: int) -> TruncatedSeries:
        return series_reciprocal(self.denominator(), order) * self.numerator

    def partial_fraction_series(self, order: int) -> TruncatedSeries:
        if self.partial_fractions is None:
            raise ValueError("no partial-fraction form attached")
        total = TruncatedSeries(self.var, order)
        for b, c, e in self.partial_fractions:
            denom = Polynomial(self.var, [1, -c]) ** e
            total = total + series_reciprocal(denom, order) * b
        return total

    def check_partial_fractions(self) -> bool:
        """Clear denominators of the partial-fraction form against the numerator."""
        if self.partial_fractions is None:
            raise ValueError("no partial-fraction form attached")
        delta = self.denominator()
        total = Polynomial(self.var)
        for b, c, e in self.partial_fractions:
            cofactor = delta.div_exact(Polynomial(self.var, [1, -c]) ** e)
            total = total + b * cofactor
        return total == self.numerator


# ---------------------------------------------------------------------------
# The auxiliary family A_k(z)


@lru_cache(maxsize=None)
def atilde_poly(k: int) -> Polynomial:
    """The degree-(2k+1) auxiliary polynomial carrying a (1+z)^(k+1) factor.

    ATilde_k(z) = z^(2k+1)
                + binom(-3/2, k) * sum_{m=0}^{k} binom(k,m) (-1)^(k+m)/(2m+1) z^(2k-2m)

    Dividing out (1+z)^(k+1) and multiplying by (-1)^k z^2 yields PhiTilde_k,
    the reduced numerator of A_k(z) = PhiTilde_k(z)/(1-z)^(k+1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    coeffs = [Fraction(0)] * (2 * k + 2)
    coeffs[2 * k + 1] = Fraction(1)
    front = binom_rational(Fraction(-3, 2), k)
    for m in range(k + 1):
        coeffs[2 * k - 2 * m] += front * comb(k, m) * Fraction((-1) ** (k + m), 2 * m + 1)
    return Polynomial("z", coeffs)


def verify_wz_sum(k: int) -> bool:
    """Exactly sum the certified identity and compare with 4^k.

    sum_m binom(k,m) binom(2k-2m, k-2m) (-1)^m (k+1)/(2m+1) = 4^k, the
    summand vanishing for m > floor(k/2).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    total = Fraction(0)
    for m in range(k // 2 + 1):
        total += comb(k, m) * comb(2 * k - 2 * m, k - 2 * m) * Fraction(
            (-1) ** m * (k + 1), 2 * m + 1
        )
    return total == 4**k


def _one_plus_z(e: int) -> Polynomial:
    return Polynomial("z", [1, 1]) ** e


def _atilde_coeffs_formula(k: int) -> list[Fraction]:
    """atilde_k(p) from the closed formula, for p = 0..k."""
    front = binom_rational(Fraction(-3, 2), k)
    out = []
    for p in range(k + 1):
        correction = Fraction(0)
        for m in range((k - p - 1) // 2 + 1):
            correction += comb(k, m) * comb(2 * k - 2 * m, k + p + 1) * Fraction(
                (-1) ** (k + m), 2 * m + 1
            )
        out.append((-1) ** p * (comb(2 * k + 1, k + p + 1) - front * correction))
    return out


def _atilde_coeffs_division(k: int) -> list[Fraction]:
    """atilde_k(p) by dividing out (1+z)^(k+1) and Taylor-shifting to z = -1."""
    quotient = atilde_poly(k).div_exact(_one_plus_z(k + 1))
    shifted = quotient.compose_affine(1, -1)  # coefficients in powers of (1+z)
    return [(-1) ** k * shifted.coefficient(p) for p in range(k + 1)]


@lru_cache(maxsize=None)
def atilde_taylor_coeffs(k: int) -> tuple[Fraction, ...]:
    """The coefficients atilde_k(0..k), computed by both routes and compared.

    Raises DualPathMismatchError if the closed formula and the
    division/Taylor-shift route disagree anywhere.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    formula = _atilde_coeffs_formula(k)
    division = _atilde_coeffs_division(k)
    if formula != division:
        raise DualPathMismatchError(
            f"atilde coefficient paths disagree at k={k}: {formula} vs {division}"
        )
    return tuple(formula)


@dataclasses.dataclass(frozen=True)
class AtildeData:
    """ATilde_k together with its shifted Taylor coefficients and PhiTilde_k."""

    k: int
    atilde: Polynomial  # degree 2k+1 in z
    taylor_coeffs: tuple[Fraction, ...]  # atilde_k(0..k)
    phi_tilde: Polynomial  # degree k+2 in z


def atilde_data(k: int) -> AtildeData:
    """Build and cross-validate the full ATilde_k bundle.

    Checks on construction: (1+z)^(k+1) divides ATilde_k exactly; the
    reconstruction (-1)^k sum_p atilde_k(p) (1+z)^(k+p+1) reproduces it; and
    PhiTilde_k(z) = z^2 sum_p atilde_k(p) (1+z)^p has degree exactly k+2.
    """
    atilde = atilde_poly(k)
    if atilde.degree != 2 * k + 1:
        raise DegreeMismatchError(f"deg ATilde_{k} = {atilde.degree}, expected {2 * k + 1}")
    coeffs = atilde_taylor_coeffs(k)

    rebuilt = Polynomial("z")
    reduced = Polynomial("z")
    for p, c in enumerate(coeffs):
        rebuilt = rebuilt + _one_plus_z(k + p + 1) * c
        reduced = reduced + _one_plus_z(p) * c
    if rebuilt * (-1) ** k != atilde:
        raise DualPathMismatchError(f"ATilde_{k} reconstruction from taylor coefficients failed")

    phi_tilde = Polynomial.monomial("z", 2) * reduced
    if phi_tilde.degree != k + 2:
        raise DegreeMismatchError(f"deg PhiTilde_{k} = {phi_tilde.degree}, expected {k + 2}")
    return AtildeData(k=k, atilde=atilde, taylor_coeffs=coeffs, phi_tilde=phi_tilde)


def phi_tilde_poly(k: int) -> Polynomial:
    return atilde_data(k).phi_tilde


def A_k_gf(k: int) -> RationalGF:
    """A_k(z) = PhiTilde_k(z)/(1-z)^(k+1); its z^n coefficient is a_k(n) for n >= 2."""
    return RationalGF(
        numerator=phi_tilde_poly(k),
        denominator_factors=((Fraction(1), k + 1),),
    )


# ---------------------------------------------------------------------------
# The fixed-s generating functions u_s(x)


def _multiplicity(i: int) -> int:
    return i // 2 + 1


def delta_factors(s: int) -> tuple[tuple[Fraction, int], ...]:
    """Factors (c, e) of Delta_s(x) = prod_{i=0}^{s-1} (1-(s-i)x)^(floor(i/2)+1)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return tuple((Fraction(s - i), _multiplicity(i)) for i in range(s))


def delta_degree(s: int) -> int:
    return -(-s * (s + 2) // 4)  # ceil(s(s+2)/4)


@lru_cache(maxsize=None)
def delta_poly(s: int) -> Polynomial:
    """Delta_s(x) expanded; constant term 1, degree ceil(s(s+2)/4)."""
    prod = Polynomial.constant("x", 1)
    for c, e in delta_factors(s):
        prod = prod * Polynomial("x", [1, -c]) ** e
    return prod


def B_poly(i: int, k: int, t: int) -> Polynomial:
    """The partial-fraction numerator B_{i,k}(x, t), a degree-(k+2) polynomial in x.

    B_{i,k}(x,t) = K(t) * PhiTilde_k(t*x) * sum_{j=k}^{floor(i/2)} g_{i,j} b_{j-k}(t).
    """
    if not 0 <= k <= i // 2:
        raise ValueError(f"k must be in 0..{i // 2} for i={i}, got {k}")
    if t < 1:
        raise ValueError("t must be >= 1")
    weight = Fraction(0)
    for j in range(k, i // 2 + 1):
        g = g_coefficient(i, j)
        if g:
            weight += g * b_value(j - k, t)
    scaled = phi_tilde_poly(k).scale_argument(t, new_var="x")
    return scaled * (K(t) * weight)


def phi_degree(s: int) -> int:
    return 1 + delta_degree(s)


@lru_cache(maxsize=None)
def phi_s_poly(s: int) -> Polynomial:
    """The numerator Phi_s(x) of u_s, cleared over Delta_s.

    Phi_s(x) = sum_i [prod_{m != i} (1-(s-m)x)^(floor(m/2)+1)]
                     * sum_k B_{i,k}(x, s-i) (1-(s-i)x)^(floor(i/2)-k)

    Raises DegreeMismatchError unless the result has degree exactly
    1 + ceil(s(s+2)/4).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    total = Polynomial("x")
    for i in range(s):
        t = s - i
        cofactor = Polynomial.constant("x", 1)
        for m in range(s):
            if m != i:
                cofactor = cofactor * Polynomial("x", [1, -(s - m)]) ** _multiplicity(m)
        inner = Polynomial("x")
        own_factor = Polynomial("x", [1, -t])
        for k in range(i // 2 + 1):
            inner = inner + B_poly(i, k, t) * own_factor ** (i // 2 - k)
        total = total + cofactor * inner
    if total.degree != phi_degree(s):
        raise DegreeMismatchError(f"deg Phi_{s} = {total.degree}, expected {phi_degree(s)}")
    return total


def u_s_gf(s: int) -> RationalGF:
    """u_s(x) with both forms attached: Phi_s/Delta_s and its partial fractions."""
    terms = []
    for i in range(s):
        t = s - i
        for k in range(i // 2 + 1):
            terms.append((B_poly(i, k, t), Fraction(t), k + 1))
    return RationalGF(
        numerator=phi_s_poly(s),
        denominator_factors=delta_factors(s),
        partial_fractions=tuple(terms),
    )


def u_s_series(s: int, order: int = 32) -> TruncatedSeries:
    """Series of u_s(x); the x^n coefficient is P(n, s) for 2 <= n <= order."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if order < 2:
        raise ValueError("order must be >= 2")
    return series_reciprocal(delta_poly(s), order) * phi_s_poly(s)
