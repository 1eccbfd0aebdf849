"""Bernoulli polynomials, Almkvist-Meurman numbers, and the proof pipeline.

The numbers M_n(h,k) = k^n (B_n(h/k) - B_n) are computed by two independent
routes: directly from Bernoulli polynomial values, and as EGF coefficients of
k x (e^{hx} - 1)/(e^{kx} - 1).  ``certify`` runs the integrality argument end
to end and records every step in a machine-checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .fixpoint import am_phi, solve_fixed_point
from .rings import QQ, binomial
from .series import EgfSeries, IntegralityReport, SeriesError

_ONE_HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def bernoulli_factor(order: int) -> EgfSeries:
    """x/(e^x - 1) as an EGF; its coefficients are the Bernoulli numbers."""
    em1 = EgfSeries.exp_line(1, order + 1) - EgfSeries.one(order + 1)
    return em1.div_by_x().reciprocal()


def bernoulli_numbers(order: int) -> EgfSeries:
    """Series whose coefficient n is B_n."""
    return bernoulli_factor(order)


def bernoulli_poly_series(q, order: int) -> EgfSeries:
    """x e^{qx}/(e^x - 1): coefficient n is the Bernoulli polynomial B_n(q)."""
    return EgfSeries.exp_line(q, order) * bernoulli_factor(order)


def bernoulli_poly_at(n: int, q) -> Fraction:
    """B_n(q) for an exact rational q."""
    return bernoulli_poly_series(Fraction(q), n)[n]


def m_series(h: int, k: int, order: int) -> EgfSeries:
    """k x (e^{hx} - 1)/(e^{kx} - 1); coefficient n is M_n(h, k).

    Valid for any nonzero integer k: after one division by x the denominator
    has constant term k, a unit.
    """
    if k == 0:
        raise SeriesError("k must be nonzero")
    num = EgfSeries.exp_line(h, order) - EgfSeries.one(order)
    den = EgfSeries.exp_line(k, order + 1) - EgfSeries.one(order + 1)
    return (num * den.div_by_x().reciprocal()).scale(k)


def m_direct(n: int, h: int, k: int) -> Fraction:
    """M_n(h,k) = k^n (B_n(h/k) - B_n), computed without any series division."""
    if k == 0:
        raise SeriesError("k must be nonzero")
    return k**n * (bernoulli_poly_at(n, Fraction(h, k)) - bernoulli_numbers(n)[n])


def m_direct_values(h: int, k: int, order: int) -> list[Fraction]:
    """[M_0(h,k), ..., M_order(h,k)] from a single Bernoulli-polynomial product."""
    if k == 0:
        raise SeriesError("k must be nonzero")
    poly = bernoulli_poly_series(Fraction(h, k), order)
    numbers = bernoulli_numbers(order)
    return [k**n * (poly[n] - numbers[n]) for n in range(order + 1)]


def reduction_factor(h: int, k: int, order: int) -> EgfSeries:
    """The Hurwitz series Q with Q * gf(1, |k|) = gf(h, k)."""
    if k == 0:
        raise SeriesError("k must be nonzero")
    gf_hk = m_series(h, k, order + 1)
    gf_base = m_series(1, abs(k), order + 1)
    return gf_hk.div_by_x() * gf_base.div_by_x().reciprocal()


def inverse_tree_series(k: int, order: int) -> EgfSeries:
    """Direct expansion of k x log(1+x) / ((1+x)^k - 1).

    This is the algebraic form of the compositional inverse of the k-tree
    series; ``certify`` cross-checks it against the order-by-order inverse.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    one_plus_x = EgfSeries.one(order) + EgfSeries.basis(1, order)
    log_series = one_plus_x.log()
    # (1+x)^k - 1 as an EGF: coefficient n is C(k,n) * n!
    den = EgfSeries(
        QQ, [0] + [binomial(k, n) * factorial(n) for n in range(1, order + 2)]
    )
    return (log_series * den.div_by_x().reciprocal()).scale(k)


def genocchi_oracle(order: int) -> EgfSeries:
    """Genocchi numbers as 2x/(e^x + 1), by direct triangular division.

    Independent of ``m_series``'s route (which divides by (e^{kx}-1)/x), so
    the two may check each other.
    """
    den = EgfSeries.exp_line(1, order) + EgfSeries.one(order)
    return (EgfSeries.basis(1, order) * den.reciprocal()).scale(2)


STEP_NAMES = (
    "reduction-factor",
    "tree-series",
    "comp-inverse",
    "subst-exp",
    "final-equality",
)


@dataclass(frozen=True)
class CertificateStep:
    name: str
    report: IntegralityReport
    equality_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.report.integral and self.equality_ok


@dataclass
class IntegralityCertificate:
    h: int
    k: int
    order: int
    steps: list[CertificateStep] = field(default_factory=list)
    final_equality: bool = False

    @property
    def valid(self) -> bool:
        return self.final_equality and all(s.ok for s in self.steps)

    @property
    def failing_step(self):
        for s in self.steps:
            if not s.ok:
                return s.name
        return None

    def render(self) -> str:
        lines = []
        for s in self.steps:
            if s.ok:
                lines.append(f"{s.name}: OK")
            elif not s.report.integral:
                value = s.report.fail_value
                shown = value.render() if hasattr(value, "render") else str(value)
                lines.append(
                    f"{s.name}: FAIL at n={s.report.first_fail_index}, value={shown}"
                )
            else:
                lines.append(f"{s.name}: FAIL (mismatch)")
        lines.append("CERTIFIED" if self.valid else "REFUTED")
        return "\n".join(lines)


def certify(h: int, k: int, order: int, inject_fault: str | None = None) -> IntegralityCertificate:
    """Run the full integrality argument for M_n(h,k), n <= order.

    Steps recorded, in order:
      1. reduction-factor: Q = gf(h,k)/gf(1,|k|) is integral.
      2. tree-series: the fixed-point solution A for |k| is integral.
      3. comp-inverse: A's compositional inverse is integral and matches the
         algebraic series |k| x log(1+x)/((1+x)^{|k|} - 1).
      4. subst-exp: substituting e^x - 1 into the inverse gives gf(1,|k|),
         and the result is integral.
      5. final-equality: Q * gf(1,|k|) = gf(h,k), every M_n is an integer,
         and both computation routes agree coefficient by coefficient.

    ``inject_fault`` corrupts one coefficient of the named step's series; it
    exists so the refutation path is testable.
    """
    if k == 0:
        raise SeriesError("k must be nonzero")
    if inject_fault is not None and inject_fault not in STEP_NAMES:
        raise ValueError(f"unknown step {inject_fault!r}")
    cert = IntegralityCertificate(h=h, k=k, order=order)
    ka = abs(k)

    def corrupt(series: EgfSeries, step: str) -> EgfSeries:
        if inject_fault != step:
            return series
        n = min(2, series.order)
        return series.with_coefficient(n, series[n] + _ONE_HALF)

    q = corrupt(reduction_factor(h, k, order), "reduction-factor")
    cert.steps.append(CertificateStep("reduction-factor", q.integrality_report()))

    a = corrupt(solve_fixed_point(am_phi(ka, order), order).solution, "tree-series")
    cert.steps.append(CertificateStep("tree-series", a.integrality_report()))

    inv = corrupt(a.comp_inverse(), "comp-inverse")
    cert.steps.append(
        CertificateStep(
            "comp-inverse",
            inv.integrality_report(),
            equality_ok=inv == inverse_tree_series(ka, order),
        )
    )

    g = corrupt(inv.subst_exp_minus_one(), "subst-exp")
    gf_base = m_series(1, ka, order)
    cert.steps.append(
        CertificateStep("subst-exp", g.integrality_report(), equality_ok=g == gf_base)
    )

    gf_hk = m_series(h, k, order)
    direct = m_direct_values(h, k, order)
    final_ok = (
        inject_fault != "final-equality"
        and q * gf_base == gf_hk
        and gf_hk.integrality_report().integral
        and list(gf_hk.coeffs) == direct
    )
    cert.steps.append(
        CertificateStep(
            "final-equality", gf_hk.integrality_report(), equality_ok=final_ok
        )
    )
    cert.final_equality = final_ok
    return cert
