"""The full exact-verification suite.

Each check returns True/False and is pure; ``run_all`` drives them in a fixed
order and reports per-check timing.  The CLI's ``verify-all`` subcommand and
the acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import bernoulli, parametric, trees
from .fixpoint import (
    am_phi,
    solve_fixed_point,
    solve_tree_series,
    verify_exp_form,
    verify_postnikov_form,
)
from .rings import POLY, QQ
from .series import EgfSeries


def check_theorem_sweep(hk_bound: int = 8, order: int = 32) -> bool:
    """Both routes to M_n(h,k) agree and are integral over the whole grid,
    and the reduction factor Q is integral with Q * gf(1,|k|) = gf(h,k)."""
    for h in range(-hk_bound, hk_bound + 1):
        for k in range(-hk_bound, hk_bound + 1):
            if k == 0:
                continue
            gf = bernoulli.m_series(h, k, order)
            direct = bernoulli.m_direct_values(h, k, order)
            if list(gf.coeffs) != direct:
                return False
            if not gf.integrality_report().integral:
                return False
            q = bernoulli.reduction_factor(h, k, order)
            if not q.integrality_report().integral:
                return False
            if q * bernoulli.m_series(1, abs(k), order) != gf:
                return False
    return True


def check_genocchi_tri_route(order: int = 16) -> bool:
    """gf(1,2) = subst(inverse of A2) = subst(direct algebraic inverse),
    all equal to the independent 2x/(e^x+1) division."""
    gf = bernoulli.m_series(1, 2, order)
    a2 = solve_tree_series(2, order)
    via_inverse = a2.comp_inverse().subst_exp_minus_one()
    via_algebraic = bernoulli.inverse_tree_series(2, order).subst_exp_minus_one()
    oracle = bernoulli.genocchi_oracle(order)
    return gf == via_inverse == via_algebraic == oracle


def check_tree_oracle(max_n: int = 7) -> bool:
    """a_n of the k=2 fixed point counts alternating trees on n+1 vertices."""
    a = solve_tree_series(2, max_n)
    return all(
        a[n] == trees.count_alternating_trees(n + 1) for n in range(1, max_n + 1)
    )


def check_inverse_consistency(max_k: int = 6, order: int = 24) -> bool:
    """Order-by-order inverse of the k-tree series equals the algebraic
    expansion of k x log(1+x)/((1+x)^k - 1); both integral."""
    for k in range(1, max_k + 1):
        inv = solve_tree_series(k, order).comp_inverse()
        direct = bernoulli.inverse_tree_series(k, order)
        if inv != direct:
            return False
        if not inv.integrality_report().integral:
            return False
    return True


def check_factorial_sum_formula(max_n: int = 20) -> bool:
    """The alternating factorial sum gives the inverse-of-A2 coefficients."""
    inv = solve_tree_series(2, max_n).comp_inverse()
    return all(
        inv[n] == parametric.alternating_factorial_sum(n)
        for n in range(1, max_n + 1)
    )


def check_parametric_closed_form(order: int = 8) -> bool:
    """Monomial-by-monomial match of the inverse expansion with the closed
    form, homogeneity of degree n-1, and the k=2 specialization."""
    series = parametric.parametric_inverse_series(order)
    for n in range(1, order + 1):
        poly = series[n]
        if not poly.is_homogeneous(n - 1):
            return False
        expected = {}
        for e1 in range(n):
            for e2 in range(n - e1):
                for e3 in range(n - e1 - e2):
                    e4 = n - 1 - e1 - e2 - e3
                    expected[(e1, e2, e3, e4)] = (
                        parametric.inverse_monomial_coefficient(e1, e2, e3, e4)
                    )
        if any(poly.coefficient(e) != c for e, c in expected.items()):
            return False
        if set(poly.terms) - {e for e, c in expected.items() if c != 0}:
            return False
    k2 = parametric.specialize_k2(series)
    return all(
        k2[n] == parametric.alternating_factorial_sum(n)
        for n in range(1, order + 1)
    )


def check_parametric_fixed_point(order: int = 8) -> bool:
    """The four-parameter fixed point has integer polynomial coefficients,
    satisfies the functional equation, and inverts the logarithmic series."""
    f = parametric.solve_parametric_f(order)
    if not f.integrality_report().integral:
        return False
    if not parametric.verify_functional_equation(f):
        return False
    inverse = parametric.parametric_inverse_series(order)
    return inverse.compose(f) == EgfSeries.basis(1, order, POLY)


def check_beta_identity(total_degree: int = 10, diag_n: int = 12) -> bool:
    """Bivariate beta-sum identity, plus its u=v=-x diagonal reproducing the
    alternating factorial sums."""
    if not parametric.beta_series_identity(total_degree):
        return False
    table = parametric.beta_rhs_table(diag_n - 1)
    return all(
        parametric.beta_diagonal_egf_coefficient(n, table)
        == parametric.alternating_factorial_sum(n)
        for n in range(1, diag_n + 1)
    )


def check_hurwitz_closure(instances: int = 200, order: int = 12, seed: int = 20231023) -> bool:
    """Random integer series stay integral under product, composition, and
    (when the linear term is 1) compositional inversion."""
    rng = random.Random(seed)

    def random_series(zero_constant: bool, unit_linear: bool = False) -> EgfSeries:
        coeffs = [rng.randint(-9, 9) for _ in range(order + 1)]
        if zero_constant:
            coeffs[0] = 0
        if unit_linear:
            coeffs[1] = 1
        return EgfSeries(QQ, coeffs)

    for _ in range(instances):
        f = random_series(zero_constant=False)
        g = random_series(zero_constant=True)
        if not (f * g).integrality_report().integral:
            return False
        if not f.compose(g).integrality_report().integral:
            return False
        h = random_series(zero_constant=True, unit_linear=True)
        if not h.comp_inverse().integrality_report().integral:
            return False
    return True


def check_postnikov_forms(order: int = 16) -> bool:
    """The k=2 solution satisfies all three equivalent functional forms."""
    a = solve_tree_series(2, order)
    return verify_postnikov_form(a) and verify_exp_form(a, 2)


def check_general_k_integrality(max_k: int = 6, order: int = 24) -> bool:
    """The fixed-point solution is a Hurwitz series for each k."""
    for k in range(1, max_k + 1):
        sol = solve_fixed_point(am_phi(k, order), order).solution
        if not sol.integrality_report().integral:
            return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float


def all_checks(quick: bool = False) -> list[tuple[str, Callable[[], bool]]]:
    if quick:
        return [
            ("theorem-sweep", lambda: check_theorem_sweep(4, 16)),
            ("genocchi-tri-route", lambda: check_genocchi_tri_route(8)),
            ("tree-oracle", lambda: check_tree_oracle(5)),
            ("inverse-consistency", lambda: check_inverse_consistency(3, 12)),
            ("factorial-sum-formula", lambda: check_factorial_sum_formula(10)),
            ("parametric-closed-form", lambda: check_parametric_closed_form(5)),
            ("parametric-fixed-point", lambda: check_parametric_fixed_point(5)),
            ("beta-identity", lambda: check_beta_identity(5, 6)),
            ("hurwitz-closure", lambda: check_hurwitz_closure(50, 8)),
            ("functional-forms", lambda: check_postnikov_forms(8)),
            ("general-k-integrality", lambda: check_general_k_integrality(3, 12)),
        ]
    return [
        ("theorem-sweep", check_theorem_sweep),
        ("genocchi-tri-route", check_genocchi_tri_route),
        ("tree-oracle", check_tree_oracle),
        ("inverse-consistency", check_inverse_consistency),
        ("factorial-sum-formula", check_factorial_sum_formula),
        ("parametric-closed-form", check_parametric_closed_form),
        ("parametric-fixed-point", check_parametric_fixed_point),
        ("beta-identity", check_beta_identity),
        ("hurwitz-closure", check_hurwitz_closure),
        ("functional-forms", check_postnikov_forms),
        ("general-k-integrality", check_general_k_integrality),
    ]


def run_all(quick: bool = False, report=print) -> list[CheckResult]:
    results = []
    for name, check in all_checks(quick):
        start = time.perf_counter()
        try:
            passed = check()
        except Exception as exc:  # a raised invariant is a failure, not a crash
            report(f"FAIL  {name}  (error: {exc})")
            results.append(CheckResult(name, False, time.perf_counter() - start))
            continue
        elapsed = time.perf_counter() - start
        report(f"{'PASS' if passed else 'FAIL'}  {name}  ({elapsed:.2f}s)")
        results.append(CheckResult(name, passed, elapsed))
    return results
