"""Exact polynomial and truncated-series arithmetic over the rationals.

Coefficients are `fractions.Fraction` throughout; no floating point enters any
computation.  Three representations are provided:

  Polynomial           dense, one variable, ascending coefficient tuple
  BivariatePolynomial  sparse, two variables, {(e1, e2): coefficient} terms
  TruncatedSeries      dense, one variable, fixed truncation order

Every polynomial carries a variable tag ("x", "z", "n", "t", ...) which is
checked whenever two polynomials are combined; mixing tags raises ValueError.
The zero polynomial has an empty coefficient tuple and degree -1.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping


class NonzeroRemainderError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclasses.dataclass(frozen=True, init=False)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    coeffs[j] is the coefficient of var**j; trailing zeros are stripped, so
    Polynomial("x", []) is the zero polynomial (degree -1).
    """

    var: str
    coeffs: tuple[Fraction, ...]

    def __init__(self, var: str, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, var: str, value) -> Polynomial:
        return cls(var, [value])

    @classmethod
    def monomial(cls, var: str, degree: int, coeff=1) -> Polynomial:
        return cls(var, [0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def _check_var(self, other: Polynomial) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.var, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return Polynomial(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Polynomial(self.var, [c * a for a in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_var(other)
        if self.is_zero or other.is_zero:
            return Polynomial(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def evaluate(self, a) -> Fraction:
        """Exact Horner evaluation at the point a."""
        a = _as_fraction(a)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def scale_argument(self, c, new_var: str | None = None) -> Polynomial:
        """Return q with q(X) = p(c*X); coefficient j picks up a factor c**j.

        The result is tagged new_var when given (substituting c*x for z turns
        a polynomial in z into one in x).
        """
        c = _as_fraction(c)
        power = Fraction(1)
        out = []
        for coeff in self.coeffs:
            out.append(coeff * power)
            power *= c
        return Polynomial(new_var or self.var, out)

    def compose_affine(self, scale, shift, new_var: str | None = None) -> Polynomial:
        """Return p(scale*X + shift) as a polynomial in X."""
        var = new_var or self.var
        arg = Polynomial(var, [shift, scale])
        acc = Polynomial(var)
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def div_exact(self, d: Polynomial) -> Polynomial:
        """Return q with self = q*d exactly.

        Raises NonzeroRemainderError if d does not divide self; a nonzero
        remainder here signals a broken identity, not a recoverable state.
        """
        self._check_var(d)
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dn = d.degree
        lead = d.coeffs[-1]
        qlen = max(len(rem) - dn, 0)
        quot = [Fraction(0)] * qlen
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i] / lead
            quot[i - dn] = c
            if c:
                for j in range(dn + 1):
                    rem[i - dn + j] -= c * d.coeffs[j]
        if any(rem):
            raise NonzeroRemainderError(
                f"{self} is not divisible by {d}: remainder {Polynomial(self.var, rem)}"
            )
        return Polynomial(self.var, quot)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = " - " if c < 0 else (" + " if parts else "")
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{self.var}" + (f"^{j}" if j > 1 else "")
            parts.append(sign + body)
        return "".join(parts) if parts[0][0] != " " else "-" + "".join(parts)[3:]


class BivariatePolynomial:
    """Sparse exact polynomial in two tagged variables.

    Terms map exponent pairs (e1, e2) to nonzero Fraction coefficients, e.g.
    {(1, 0): 2, (0, 1): -1} with vars ("n", "s") is 2n - s.  Treat instances
    as immutable: every operation returns a new polynomial.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, str], terms: Mapping | None = None):
        v = (str(vars[0]), str(vars[1]))
        clean: dict[tuple[int, int], Fraction] = {}
        for (e1, e2), c in (terms or {}).items():
            c = _as_fraction(c)
            if c != 0:
                clean[(int(e1), int(e2))] = c
        self.vars = v
        self.terms = clean

    @classmethod
    def constant(cls, vars: tuple[str, str], value) -> BivariatePolynomial:
        return cls(vars, {(0, 0): value})

    @classmethod
    def from_univariate(cls, p: Polynomial, position: int, vars: tuple[str, str]) -> BivariatePolynomial:
        """Embed a univariate polynomial as variable 0 or 1 of a bivariate one."""
        if p.var != vars[position]:
            raise ValueError(f"variable mismatch: {p.var!r} is not {vars[position]!r}")
        if position == 0:
            return cls(vars, {(j, 0): c for j, c in enumerate(p.coeffs)})
        return cls(vars, {(0, j): c for j, c in enumerate(p.coeffs)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, position: int) -> int:
        """Degree in the first (0) or second (1) variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[position] for e in self.terms)

    def coefficient(self, e1: int, e2: int) -> Fraction:
        return self.terms.get((e1, e2), Fraction(0))

    def _check_vars(self, other: BivariatePolynomial) -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(self.vars, other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return BivariatePolynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return BivariatePolynomial(self.vars)
            return BivariatePolynomial(self.vars, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        self._check_vars(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                e = (a1 + b1, a2 + b2)
                out[e] = out.get(e, Fraction(0)) + c * d
        return BivariatePolynomial(self.vars, out)

    __rmul__ = __mul__

    def evaluate(self, a, b) -> Fraction:
        """Evaluate at the point (a, b); agrees with iterated univariate evaluation."""
        a, b = _as_fraction(a), _as_fraction(b)
        total = Fraction(0)
        for (e1, e2), c in self.terms.items():
            total += c * a**e1 * b**e2
        return total

    def substitute_linear(self, position: int, scale, shift, new_name: str | None = None) -> BivariatePolynomial:
        """Replace variable `position` by scale*V + shift (V optionally renamed).

        Used both for the reparametrization t -> s - i and for argument shifts
        like n -> n - 1 inside recurrence checks.
        """
        scale, shift = _as_fraction(scale), _as_fraction(shift)
        names = list(self.vars)
        if new_name is not None:
            names[position] = new_name
        vars = (names[0], names[1])
        # Cache expansions of (scale*V + shift)**e per exponent.
        expanded: dict[int, list[Fraction]] = {0: [Fraction(1)]}

        def powers(e: int) -> list[Fraction]:
            if e not in expanded:
                prev = powers(e - 1)
                cur = [Fraction(0)] * (e + 1)
                for j, c in enumerate(prev):
                    cur[j] += c * shift
                    cur[j + 1] += c * scale
                expanded[e] = cur
            return expanded[e]

        out: dict[tuple[int, int], Fraction] = {}
        for (e1, e2), c in self.terms.items():
            e = e1 if position == 0 else e2
            keep = e2 if position == 0 else e1
            for j, w in enumerate(powers(e)):
                if w == 0:
                    continue
                key = (j, keep) if position == 0 else (keep, j)
                out[key] = out.get(key, Fraction(0)) + c * w
        return BivariatePolynomial(vars, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        v1, v2 = self.vars
        bits = []
        for (e1, e2) in sorted(self.terms, key=lambda e: (-e[0], -e[1])):
            c = self.terms[(e1, e2)]
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in ((v1, e1), (v2, e2))
                if e > 0
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.vars}, {self.terms})"


@dataclasses.dataclass(frozen=True, init=False)
class TruncatedSeries:
    """Power series known exactly up to and including order `order`.

    Combining two series truncates to the smaller of the two orders.
    """

    var: str
    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, var: str, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedSeries:
        return cls(p.var, order, p.coeffs)

    def coefficient(self, j: int) -> Fraction:
        if j > self.order:
            raise IndexError(f"coefficient {j} beyond truncation order {self.order}")
        return self.coeffs[j]

    def _check_var(self, other: TruncatedSeries) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return TruncatedSeries(self.var, self.order, (self.coeffs[0] + c,) + self.coeffs[1:])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_var(other)
        m = min(self.order, other.order)
        return TruncatedSeries(self.var, m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -_as_fraction(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return TruncatedSeries(self.var, self.order, [c * a for a in self.coeffs])
        if isinstance(other, Polynomial):
            other = TruncatedSeries.from_polynomial(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_var(other)
        m = min(self.order, other.order)
        out = [Fraction(0)] * (m + 1)
        for i in range(m + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(self.var, m, out)

    __rmul__ = __mul__


def series_reciprocal(p: Polynomial, order: int) -> TruncatedSeries:
    """Expand 1/p as a truncated series; requires constant term exactly 1.

    Recurrence: b_0 = 1, b_m = -sum_{k=1..m} a_k b_{m-k}.
    """
    if p.coefficient(0) != 1:
        raise ValueError("series_reciprocal requires constant term 1")
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1)
    a = p.coeffs
    for m in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, min(m, len(a) - 1) + 1):
            if a[k]:
                acc += a[k] * b[m - k]
        b[m] = -acc
    return TruncatedSeries(p.var, order, b)


def binom_rational(top, k: int) -> Fraction:
    """Generalized binomial coefficient top*(top-1)***(top-k+1)/k!, exact."""
    if k < 0:
        raise ValueError("k must be >= 0")
    top = _as_fraction(top)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / factorial(k)


def binom_poly_in_n(shift, scale, k: int) -> Polynomial:
    """The degree-k polynomial prod_{j=0..k-1}(scale*n + shift - j) / k! in n.

    Evaluating at n0 gives binom_rational(scale*n0 + shift, k); this is the
    polynomial extension of the half-integer binomial coefficient.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    acc = Polynomial.constant("n", 1)
    for j in range(k):
        acc = acc * Polynomial("n", [_as_fraction(shift) - j, scale])
    return acc * Fraction(1, factorial(k))
