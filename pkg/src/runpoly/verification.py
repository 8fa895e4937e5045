"""The cross-verification battery behind the `verify` subcommand.

Every check recomputes its subject through the public module entry points
(module-qualified calls, so test harnesses can substitute corrupted families)
and compares exact values; a check that raises is reported as failed rather
than aborting the battery.  Nothing here is allowed to tolerate approximate
agreement.
"""

from __future__ import annotations

import dataclasses
from math import factorial
from typing import Callable

from . import bruteforce, closedform, genfun, recurrences, triangle
from .poly import Polynomial


@dataclasses.dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        label = "ok" if self.passed else "FAILED"
        return f"{label:6} {self.name}: {self.detail}"


class _CheckFailure(Exception):
    pass


def _run(name: str, body: Callable[[], str]) -> CheckResult:
    """Run one check; the body returns a detail string or raises a failure."""
    try:
        detail = body()
    except _CheckFailure as exc:
        return CheckResult(name, False, str(exc))
    except Exception as exc:  # a crash is a failed check, not a crashed battery
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, True, detail)


def run_verification(
    n_max: int = 20, s_max: int = 10, i_max: int = 10, k_max: int = 20
) -> list[CheckResult]:
    """Run the full battery; one CheckResult per check, in a fixed order."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if s_max < 1 or i_max < 1 or k_max < 0:
        raise ValueError("bounds must be positive")

    tri = triangle.build_triangle(n_max)
    results = []

    def check(name):
        def wrap(body):
            results.append(_run(name, body))
            return body

        return wrap

    @check("row-sums")
    def _row_sums():
        for n in range(2, n_max + 1):
            total = sum(tri.row(n))
            if total != factorial(n):
                raise _CheckFailure(f"row n={n} sums to {total}, not {n}!")
        return f"sum_s P(n,s) = n! for 2 <= n <= {n_max}"

    @check("brute-vs-recurrence")
    def _brute():
        cap = min(n_max, bruteforce.ENUMERATION_CAP - 1)
        brute = bruteforce.brute_triangle(cap)
        for n in range(2, cap + 1):
            if brute.row(n) != tri.row(n):
                raise _CheckFailure(f"row n={n} differs")
        return f"exhaustive enumeration matches the recurrence for n <= {cap}"

    @check("closed-vs-recurrence")
    def _closed():
        for n in range(2, n_max + 1):
            for s in range(1, min(n, s_max + 1)):
                got = closedform.p_closed_form(n, s)
                if got != tri.value(n, s):
                    raise _CheckFailure(
                        f"P({n},{s}): closed form {got} != {tri.value(n, s)}"
                    )
        return f"explicit formula matches the recurrence for n <= {n_max}, s <= {s_max}"

    @check("series-vs-recurrence")
    def _series():
        for s in range(1, s_max + 1):
            series = genfun.u_s_series(s, n_max)
            for n in range(2, n_max + 1):
                if series.coefficient(n) != tri.value(n, s):
                    raise _CheckFailure(
                        f"P({n},{s}): series {series.coefficient(n)} != {tri.value(n, s)}"
                    )
        return f"u_s coefficients match the recurrence for s <= {s_max}, n <= {n_max}"

    @check("phi-recurrence")
    def _phi_rec():
        report = recurrences.verify_phi_recurrence(closedform.phi_polys(i_max), i_max)
        if not report.ok:
            raise _CheckFailure(str(report))
        return str(report)

    @check("psi-recurrence")
    def _psi_rec():
        report = recurrences.verify_psi_recurrence(closedform.psi_polys(i_max), i_max)
        if not report.ok:
            raise _CheckFailure(str(report))
        return str(report)

    @check("atilde-divisibility")
    def _divisibility():
        one_plus_z = Polynomial("z", [1, 1])
        for k in range(k_max + 1):
            genfun.atilde_poly(k).div_exact(one_plus_z ** (k + 1))  # raises on failure
        return f"(1+z)^(k+1) divides ATilde_k for k <= {k_max}"

    @check("wz-normalization")
    def _wz():
        for k in range(k_max + 1):
            if not genfun.verify_wz_sum(k):
                raise _CheckFailure(f"sum != 4^k at k={k}")
        return f"normalization sums equal 4^k for k <= {k_max}"

    @check("atilde-dual-path")
    def _dual():
        hi = min(k_max, 12)
        for k in range(hi + 1):
            genfun.atilde_taylor_coeffs(k)  # raises DualPathMismatchError on failure
        return f"closed formula and Taylor shift agree for k <= {hi}"

    @check("a-k-series")
    def _ak_series():
        hi = min(k_max, 12)
        for k in range(hi + 1):
            series = genfun.A_k_gf(k).series(40)
            for n in range(2, 41):
                if series.coefficient(n) != closedform.a_value(k, n):
                    raise _CheckFailure(f"A_{k} series wrong at z^{n}")
        return f"A_k series matches the a_k polynomials for k <= {hi}, n <= 40"

    @check("phi-series-product")
    def _phi_series():
        parts = closedform.phi_polys(i_max)
        for n in range(2, min(n_max, 10) + 1):
            for t in range(1, 7):
                series = closedform.phi_generating_series(n, t, i_max)
                for i, part in enumerate(parts):
                    if series.coefficient(i) != closedform.K(t) * part.evaluate(n, t):
                        raise _CheckFailure(f"x^{i} coefficient wrong at n={n}, t={t}")
        return f"product form reproduces every phi part for i <= {i_max}"

    @check("partial-fractions")
    def _partial():
        for s in range(1, s_max + 1):
            if not genfun.u_s_gf(s).check_partial_fractions():
                raise _CheckFailure(f"clearing denominators fails at s={s}")
        return f"partial fractions clear back to Phi_s for s <= {s_max}"

    @check("degree-claims")
    def _degrees():
        for i, psi in enumerate(closedform.psi_polys(i_max)):
            if psi.part.degree_in(0) != i // 2:
                raise _CheckFailure(f"deg_n Q_{i} = {psi.part.degree_in(0)} != {i // 2}")
        for s in range(1, s_max + 1):
            if genfun.delta_poly(s).degree != genfun.delta_degree(s):
                raise _CheckFailure(f"deg Delta_{s} wrong")
            if genfun.phi_s_poly(s).degree != genfun.phi_degree(s):
                raise _CheckFailure(f"deg Phi_{s} wrong")
        for k in range(min(k_max, 12) + 1):
            if genfun.phi_tilde_poly(k).degree != k + 2:
                raise _CheckFailure(f"deg PhiTilde_{k} wrong")
        return "n-degrees, Phi/Delta degrees, and PhiTilde degrees all as claimed"

    return results
