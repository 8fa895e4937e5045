import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from runpoly.closedform import psi_polys
from runpoly.genfun import delta_factors, phi_s_poly, u_s_series
from runpoly.poly import Polynomial, TruncatedSeries
from runpoly.serialize import (
    bivariate_to_doc,
    delta_latex,
    doc_to_bivariate,
    doc_to_polynomial,
    doc_to_series,
    doc_to_triangle,
    fraction_to_text,
    phi_row_latex,
    polynomial_to_doc,
    polynomial_to_latex,
    polynomial_to_tsv,
    psi_row_latex,
    series_to_doc,
    series_to_latex,
    text_to_fraction,
    triangle_to_doc,
    triangle_to_tsv,
)
from runpoly.triangle import build_triangle

small_fractions = st.fractions(min_value=-100, max_value=100, max_denominator=64)


class TestRationalText:
    def test_integer_form_drops_denominator(self):
        assert fraction_to_text(Fraction(4)) == "4"
        assert fraction_to_text(Fraction(-7)) == "-7"
        assert fraction_to_text(Fraction(3, 2)) == "3/2"
        assert fraction_to_text(Fraction(-1, 8)) == "-1/8"

    @given(small_fractions)
    def test_round_trip(self, q):
        assert text_to_fraction(fraction_to_text(q)) == q

    @pytest.mark.parametrize("bad", ["1.5", "3/0", "1e3", "2/-3", "", "x", "1/2/3"])
    def test_rejects_non_rational_text(self, bad):
        with pytest.raises(ValueError):
            text_to_fraction(bad)


class TestJsonDocs:
    @given(st.lists(small_fractions, max_size=8))
    def test_polynomial_round_trip(self, coeffs):
        p = Polynomial("x", coeffs)
        doc = polynomial_to_doc(p)
        assert doc["kind"] == "polynomial"
        assert doc_to_polynomial(json.loads(json.dumps(doc))) == p

    def test_polynomial_doc_has_no_floats(self):
        doc = polynomial_to_doc(Polynomial("x", [Fraction(1, 3), Fraction(2, 7)]))

        def reject(_):
            raise AssertionError("float leaked into JSON")

        json.loads(json.dumps(doc), parse_float=reject)

    def test_bivariate_round_trip(self):
        for psi in psi_polys(6):
            doc = bivariate_to_doc(psi.part)
            assert doc_to_bivariate(json.loads(json.dumps(doc))) == psi.part

    def test_series_round_trip(self):
        ts = u_s_series(3, 12)
        assert doc_to_series(json.loads(json.dumps(series_to_doc(ts)))) == ts

    def test_series_doc_validates_order(self):
        doc = series_to_doc(TruncatedSeries("x", 4, [1, 2, 3]))
        doc["order"] = 7
        with pytest.raises(ValueError):
            doc_to_series(doc)

    def test_triangle_round_trip(self):
        tri = build_triangle(12)
        assert doc_to_triangle(json.loads(json.dumps(triangle_to_doc(tri)))) == tri

    def test_triangle_counts_are_strings(self):
        doc = triangle_to_doc(build_triangle(25))
        assert all(
            isinstance(c, str) for row in doc["rows"] for c in row["counts"]
        )

    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValueError):
            doc_to_polynomial({"kind": "triangle", "rows": []})


class TestTsv:
    def test_triangle_rows(self):
        text = triangle_to_tsv(build_triangle(4))
        assert text.splitlines() == ["2\t2", "3\t2\t4", "4\t2\t12\t10"]

    def test_polynomial_rows(self):
        text = polynomial_to_tsv(Polynomial("x", [1, Fraction(-1, 2)]))
        assert text.splitlines() == ["0\t1", "1\t-1/2"]


class TestLatex:
    def test_psi_rows_match_tabulated_style(self):
        family = psi_polys(3)
        assert psi_row_latex(family[0]) == "K(s)"
        assert psi_row_latex(family[1]) == "K(s-1)(-2)"
        assert psi_row_latex(family[2]) == "K(s-2)(-2n+s+8)/4"
        assert psi_row_latex(family[3]) == "K(s-3)(2n-s-3)/2"

    def test_phi_rows_factor_content_and_power(self):
        assert phi_row_latex(phi_s_poly(1)) == "2x^2"
        assert phi_row_latex(phi_s_poly(3)) == "2x^4(-6x+5)"
        assert phi_row_latex(phi_s_poly(4)) == "4x^5(24x^2-29x+8)"

    def test_delta_factored_form(self):
        assert delta_latex(delta_factors(4)) == "(1-4x)(1-3x)(1-2x)^2(1-x)^2"
        assert delta_latex(delta_factors(1)) == "(1-x)"

    def test_generic_polynomial(self):
        assert polynomial_to_latex(Polynomial("x", [1, 0, -1])) == "-x^2+1"
        assert polynomial_to_latex(Polynomial("z", [])) == "0"
        assert polynomial_to_latex(Polynomial("z", [Fraction(3, 2)])) == "3/2"

    def test_series_with_order_marker(self):
        text = series_to_latex(u_s_series(1, 4))
        assert text == "2x^2+2x^3+2x^4+O(x^5)"
