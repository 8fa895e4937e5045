"""Lossless text encodings for the package's value types.

Rationals travel as strings "p/q" (just "p" when the denominator is 1), never
as floats, so every JSON document round-trips bit-exactly.  Triangle counts
are decimal strings too: rows past n = 20 overflow 64-bit consumers.

The LaTeX emitters mirror the usual tabulated presentation: psi rows keep the
K(s-i) prefactor symbolic and pull the coefficients over a common
denominator; Phi rows factor out the content and the leading power of x.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .closedform import PsiPolynomial
from .poly import BivariatePolynomial, Polynomial, TruncatedSeries
from .triangle import RunCountTriangle

_FRACTION_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def fraction_to_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def text_to_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


# ---------------------------------------------------------------------------
# JSON-shaped documents (plain dicts, ready for json.dumps)


def polynomial_to_doc(p: Polynomial) -> dict:
    return {
        "kind": "polynomial",
        "variable": p.var,
        "coefficients": [fraction_to_text(c) for c in p.coeffs],
    }


def doc_to_polynomial(doc: dict) -> Polynomial:
    if doc.get("kind") != "polynomial":
        raise ValueError(f"expected kind 'polynomial', got {doc.get('kind')!r}")
    return Polynomial(doc["variable"], [text_to_fraction(c) for c in doc["coefficients"]])


def bivariate_to_doc(p: BivariatePolynomial) -> dict:
    terms = sorted(p.terms.items())
    return {
        "kind": "polynomial",
        "variables": list(p.vars),
        "terms": [[e1, e2, fraction_to_text(c)] for (e1, e2), c in terms],
    }


def doc_to_bivariate(doc: dict) -> BivariatePolynomial:
    if doc.get("kind") != "polynomial":
        raise ValueError(f"expected kind 'polynomial', got {doc.get('kind')!r}")
    v1, v2 = doc["variables"]
    terms = {(e1, e2): text_to_fraction(c) for e1, e2, c in doc["terms"]}
    return BivariatePolynomial((v1, v2), terms)


def series_to_doc(ts: TruncatedSeries) -> dict:
    return {
        "kind": "series",
        "variable": ts.var,
        "order": ts.order,
        "coefficients": [fraction_to_text(c) for c in ts.coeffs],
    }


def doc_to_series(doc: dict) -> TruncatedSeries:
    if doc.get("kind") != "series":
        raise ValueError(f"expected kind 'series', got {doc.get('kind')!r}")
    coeffs = [text_to_fraction(c) for c in doc["coefficients"]]
    if len(coeffs) != doc["order"] + 1:
        raise ValueError("coefficient list does not match the declared order")
    return TruncatedSeries(doc["variable"], doc["order"], coeffs)


def triangle_to_doc(tri: RunCountTriangle) -> dict:
    return {
        "kind": "triangle",
        "n_max": tri.n_max,
        "rows": [
            {"n": n, "counts": [str(c) for c in tri.row(n)]}
            for n in range(2, tri.n_max + 1)
        ],
    }


def doc_to_triangle(doc: dict) -> RunCountTriangle:
    if doc.get("kind") != "triangle":
        raise ValueError(f"expected kind 'triangle', got {doc.get('kind')!r}")
    rows = tuple(tuple(int(c) for c in row["counts"]) for row in doc["rows"])
    return RunCountTriangle(n_max=doc["n_max"], rows=rows)


# ---------------------------------------------------------------------------
# TSV


def triangle_to_tsv(tri: RunCountTriangle) -> str:
    lines = []
    for n in range(2, tri.n_max + 1):
        lines.append("\t".join([str(n)] + [str(c) for c in tri.row(n)]))
    return "\n".join(lines)


def polynomial_to_tsv(p: Polynomial) -> str:
    lines = [f"{j}\t{fraction_to_text(c)}" for j, c in enumerate(p.coeffs)]
    return "\n".join(lines)


def series_to_tsv(ts: TruncatedSeries) -> str:
    lines = [f"{j}\t{fraction_to_text(c)}" for j, c in enumerate(ts.coeffs)]
    return "\n".join(lines)


def bivariate_to_tsv(p: BivariatePolynomial) -> str:
    lines = [
        f"{e1}\t{e2}\t{fraction_to_text(c)}" for (e1, e2), c in sorted(p.terms.items())
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# LaTeX


def _power_text(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if e < 10 else f"{var}^{{{e}}}"


def _join_signed(parts: list[tuple[Fraction, str]]) -> str:
    """Render (coefficient, power-text) monomials as a signed sum."""
    pieces = []
    for c, pow_text in parts:
        sign = "-" if c < 0 else ("+" if pieces else "")
        mag = fraction_to_text(abs(c))
        if pow_text:
            if mag == "1":
                mag = ""
            elif "/" in mag:
                mag = f"({mag})"
        pieces.append(f"{sign}{mag}{pow_text}")
    return "".join(pieces) if pieces else "0"


def polynomial_to_latex(p: Polynomial) -> str:
    parts = [
        (p.coefficient(j), _power_text(p.var, j))
        for j in range(p.degree, -1, -1)
        if p.coefficient(j)
    ]
    return _join_signed(parts)


def psi_row_latex(psi: PsiPolynomial) -> str:
    """One table row: prefactor K(s-i), expanded numerator, common denominator."""
    i = psi.index
    prefactor = "K(s)" if i == 0 else f"K(s-{i})"
    terms = psi.part.terms
    if not terms:
        return f"{prefactor}(0)"
    den = lcm(*(c.denominator for c in terms.values()))
    # highest n power first, s powers breaking ties
    ordered = sorted(terms.items(), key=lambda item: (-item[0][0], -item[0][1]))
    parts = [
        (c * den, _power_text("n", en) + _power_text("s", es))
        for (en, es), c in ordered
    ]
    numerator = _join_signed(parts)
    if numerator == "1" and den == 1:
        return prefactor
    body = f"{prefactor}({numerator})"
    return body if den == 1 else f"{body}/{den}"


def phi_row_latex(p: Polynomial) -> str:
    """One table row: content and leading x power factored out of Phi_s."""
    if p.is_zero:
        return "0"
    if any(c.denominator != 1 for c in p.coeffs):
        return polynomial_to_latex(p)
    power = next(j for j, c in enumerate(p.coeffs) if c)
    inner = [int(c) for c in p.coeffs[power:]]
    content = gcd(*inner)
    inner = [c // content for c in inner]
    head = f"{content}{_power_text(p.var, power)}"
    if inner == [1]:
        return head
    parts = [
        (Fraction(c), _power_text(p.var, j))
        for j, c in sorted(enumerate(inner), reverse=True)
        if c
    ]
    return f"{head}({_join_signed(parts)})"


def delta_latex(factors: tuple[tuple[Fraction, int], ...], var: str = "x") -> str:
    """The factored denominator, e.g. (1-4x)(1-3x)(1-2x)^2(1-x)^2."""
    pieces = []
    for c, e in factors:
        c_text = "" if c == 1 else fraction_to_text(c)
        base = f"(1-{c_text}{var})"
        pieces.append(base if e == 1 else f"{base}^{e}")
    return "".join(pieces)


def series_to_latex(ts: TruncatedSeries) -> str:
    parts = [
        (c, _power_text(ts.var, j)) for j, c in enumerate(ts.coeffs) if c
    ]
    head = _join_signed(parts)
    return f"{head}+O({_power_text(ts.var, ts.order + 1)})"


def triangle_to_latex(tri: RunCountTriangle) -> str:
    lines = []
    for n in range(2, tri.n_max + 1):
        lines.append(" & ".join([str(n)] + [str(c) for c in tri.row(n)]) + r" \\")
    return "\n".join(lines)
