"""Golden reference rows for the psi and Phi polynomial families.

The psi rows are stored as (numerator expression, denominator) pairs in the
symbols n and s, exactly as tabulated; psi_i(n,s) = K(s-i) * numerator/den.
The Phi rows are stored as (prefactor, power, coefficients) with the inner
coefficients listed from the highest degree down, so that

    Phi_s(x) = prefactor * x^power * sum_d coeffs[d] * x^(len-1-d).

Helpers at the bottom convert both shapes into the package's own polynomial
types, expanding the psi expressions through sympy so the comparison does not
reuse any arithmetic from the code under test.
"""

from fractions import Fraction

import sympy

from runpoly.poly import Polynomial

PSI_ROWS = {
    0: ("1", 1),
    1: ("-2", 1),
    2: ("-2*n+s+8", 4),
    3: ("2*n-s-3", 2),
    4: ("4*n**2-4*(s+8)*n+s**2+15*s+32", 32),
    5: ("-8*n**2+8*(s+3)*n-2*(s**2+5*s+10)", 32),
    6: ("-8*n**3+12*(s+8)*n**2-2*(3*s**2+45*s+98)*n+s**3+21*s**2+74*s+144", 384),
    # the tabulated i=7 row drops a closing parenthesis; restored before the /384
    7: ("16*n**3-24*(s+3)*n**2+4*(3*s**2+15*s+32)*n-2*(s**3+6*s**2+23*s+42)", 384),
    8: (
        "16*n**4-32*(s+8)*n**3+8*(3*s**2+45*s+100)*n**2"
        "-8*(s**3+21*s**2+76*s+160)*n+s**4+26*s**3+107*s**2+442*s+768",
        6144,
    ),
    9: (
        "-16*n**4+32*(s+3)*n**3-8*(3*s**2+15*s+34)*n**2"
        "+8*(s+3)*(s**2+3*s+16)*n-(s**4+6*s**3+35*s**2+126*s+216)",
        3072,
    ),
    10: (
        "-32*n**5+80*(s+8)*n**4-80*(s**2+15*s+34)*n**3+40*(21*s**2+s**3+78*s+176)*n**2"
        "-2*(5*s**4+130*s**3+555*s**2+2510*s+4504)*n"
        "+s**5+30*s**4+115*s**3+870*s**2+2824*s+4800",
        122880,
    ),
}

PHI_ROWS = {
    1: (2, 2, (1,)),
    2: (4, 3, (1,)),
    3: (2, 4, (-6, 5)),
    4: (4, 5, (24, -29, 8)),
    5: (2, 6, (720, -1704, 1436, -501, 61)),
    6: (4, 7, (17280, -51336, 61188, -37256, 12209, -2041, 136)),
    7: (
        2,
        8,
        (-3628800, 15729120, -29341872, 30810864, -20028656, 8353808,
         -2236439, 370871, -34601, 1385),
    ),
    8: (
        4,
        9,
        (696729600, -3555239040, 8107966944, -10906662240, 9627417336,
         -5872225480, 2537780728, -783164808, 171355239, -25936503,
         2579241, -151385, 3968),
    ),
    9: (
        2,
        10,
        (1316818944000, -8712886694400, 26410986334080, -48618945021312,
         60779114417952, -54684478479456, 36624658707312, -18628018251952,
         7273896122392, -2188789058612, 506111568077, -89028957282,
         11685816855, -1107016832, 71414171, -2804314, 50521),
    ),
    10: (
        4,
        11,
        (2528292372480000, -18993012627456000, 66507291476582400,
         -144199874533248000, 216971940209451264, -240735551604776064,
         204330019791468672, -135856983272339904, 71875337579512880,
         -30562090468050280, 10504633067351272, -2924633644527940,
         658629666786430, -119364099863329, 17244871619376, -1956223222079,
         170214919190, -10952481287, 490431140, -13630637, 176896),
    ),
}


def psi_row_terms(i: int) -> dict[tuple[int, int], Fraction]:
    """Expand row i into {(n-exponent, s-exponent): coefficient} via sympy."""
    n, s = sympy.symbols("n s")
    expr_text, den = PSI_ROWS[i]
    expr = sympy.expand(sympy.sympify(expr_text, locals={"n": n, "s": s}) / den)
    terms = {}
    for (en, es), coeff in sympy.Poly(expr, n, s).terms():
        rat = sympy.Rational(coeff)
        terms[(int(en), int(es))] = Fraction(int(rat.p), int(rat.q))
    return terms


def phi_row_poly(s: int) -> Polynomial:
    """Row s as a dense Polynomial in x."""
    pref, power, high_to_low = PHI_ROWS[s]
    coeffs = [Fraction(0)] * power + [pref * c for c in reversed(high_to_low)]
    return Polynomial("x", coeffs)
