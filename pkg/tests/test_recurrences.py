import dataclasses

import pytest

from runpoly.closedform import NT_VARS, phi_polys, psi_polys
from runpoly.poly import BivariatePolynomial
from runpoly.recurrences import verify_phi_recurrence, verify_psi_recurrence


class TestPhiRecurrence:
    def test_holds_through_i_12(self):
        report = verify_phi_recurrence(phi_polys(12), 12)
        assert report.ok
        assert report.failures == ()
        assert "all identities hold" in str(report)

    def test_rejects_bad_range(self):
        family = phi_polys(4)
        with pytest.raises(ValueError):
            verify_phi_recurrence(family, 0)
        with pytest.raises(ValueError):
            verify_phi_recurrence(family, 5)

    def test_detects_corrupted_part(self):
        family = phi_polys(6)
        family[2] = family[2] + BivariatePolynomial.constant(NT_VARS, 1)
        report = verify_phi_recurrence(family, 6)
        assert not report.ok
        # index 2 appears on the left of its own identity and on the right of
        # the two identities after it
        assert 2 in report.failures
        assert set(report.failures) <= {2, 3, 4}
        assert "FAILED" in str(report)


class TestPsiRecurrence:
    def test_holds_through_i_12(self):
        report = verify_psi_recurrence(psi_polys(12), 12)
        assert report.ok

    def test_rejects_bad_range(self):
        family = psi_polys(4)
        with pytest.raises(ValueError):
            verify_psi_recurrence(family, 17)

    def test_detects_corrupted_weight(self):
        family = psi_polys(8)
        broken = family[3].part + BivariatePolynomial(("n", "s"), {(1, 1): 1})
        family[3] = dataclasses.replace(family[3], part=broken)
        report = verify_psi_recurrence(family, 8)
        assert not report.ok
        assert 3 in report.failures
        assert set(report.failures) <= {3, 4, 5}

    def test_reports_every_corrupted_index(self):
        family = psi_polys(10)
        for i in (2, 7):
            bumped = family[i].part + BivariatePolynomial.constant(("n", "s"), 1)
            family[i] = dataclasses.replace(family[i], part=bumped)
        report = verify_psi_recurrence(family, 10)
        assert 2 in report.failures
        assert 7 in report.failures
