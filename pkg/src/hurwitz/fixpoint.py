"""Order-by-order fixed-point solving for the functional equations.

Each equation is written as A = Phi(A) where coefficient n of Phi(A) depends
only on coefficients 0..n-1 of A (an x-adic contraction), so iterating from
the zero series pins one further coefficient per pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .rings import QQ, binomial
from .series import EgfSeries, SeriesError


class NotAContractionError(SeriesError):
    """The iteration failed to stabilize: Phi is not an x-adic contraction."""


@dataclass(frozen=True)
class PhiSpec:
    description: str
    apply: Callable[[EgfSeries], EgfSeries]


@dataclass(frozen=True)
class FixpointResult:
    solution: EgfSeries
    iterations: int
    stabilized: bool


def solve_fixed_point(phi: PhiSpec, order: int, ring=QQ) -> FixpointResult:
    """Iterate A <- Phi(A) from zero and insist on exact stabilization.

    For an x-adic contraction, pass m fixes coefficient m, so the iteration
    runs at growing truncation order: pass m works at order m, which keeps
    early passes cheap.  The final full-order check Phi(A) = A is what
    certifies the result (and catches non-contractions).
    """
    a = EgfSeries.zero(0, ring)
    iterations = 0
    for n in range(1, order + 1):
        a = phi.apply(a.extend(n))
        iterations += 1
        if a.order != n:
            raise NotAContractionError(
                f"{phi.description} changed the truncation order"
            )
    if phi.apply(a) != a:
        raise NotAContractionError(
            f"{phi.description} did not stabilize after {iterations} iterations"
        )
    return FixpointResult(solution=a, iterations=iterations, stabilized=True)


def pk_of_series(k: int, a: EgfSeries) -> EgfSeries:
    """p_k(A) = C(k,1) + C(k,2) A + ... + C(k,k) A^{k-1}.

    Evaluated from the explicit binomial sum, never as ((1+A)^k - 1)/A.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    ring, order = a.ring, a.order
    result = EgfSeries.zero(order, ring)
    power = EgfSeries.one(order, ring)
    for j in range(1, k + 1):
        if j > 1:
            power = power * a
        result = result + power.scale(ring.from_int(binomial(k, j)))
    return result


def sum_powers_against_basis(p: EgfSeries) -> EgfSeries:
    """sum_{n>=1} p^{n-1} x^n/n! at p's truncation order.

    Multiplying by x^n/n! in EGF arithmetic is the shifted binomial
    coefficient, so coefficient m of the sum is
    sum_{n=1}^{m} C(m,n) (p^{n-1})_{m-n}.
    """
    ring, order = p.ring, p.order
    powers = [EgfSeries.one(order, ring)]
    for _ in range(order - 1):
        powers.append(powers[-1] * p)
    coeffs = [ring.zero]
    for m in range(1, order + 1):
        acc = ring.zero
        for n in range(1, m + 1):
            acc = acc + binomial(m, n) * powers[n - 1][m - n]
        coeffs.append(acc)
    return EgfSeries(ring, coeffs)


def am_phi(k: int, order: int = None, ring=QQ) -> PhiSpec:
    """Phi(A) = sum_{n>=1} p_k(A)^{n-1} x^n/n!, the Hurwitz-making form.

    The map works at the truncation order of its argument; ``order`` is
    accepted for symmetry with the solver but not needed.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")

    def apply(a: EgfSeries) -> EgfSeries:
        return sum_powers_against_basis(pk_of_series(k, a))

    return PhiSpec(description=f"tree-series-phi(k={k})", apply=apply)


def solve_tree_series(k: int, order: int) -> EgfSeries:
    """The solution A of (1+A)^k = e^{x p_k(A)} up to the given order."""
    return solve_fixed_point(am_phi(k), order).solution


def verify_exp_form(a: EgfSeries, k: int) -> bool:
    """Check (1+A)^k = e^{x p_k(A)} and B = e^{x(1+B+...+B^{k-1})/k}, B = 1+A."""
    ring, order = a.ring, a.order
    if not ring.is_zero(a.coeffs[0]):
        raise SeriesError("expects zero constant term")
    one = EgfSeries.one(order, ring)
    b = one + a
    lhs = one
    geom = EgfSeries.zero(order, ring)
    power = one
    for j in range(k):
        lhs = lhs * b
        if j > 0:
            power = power * b
        geom = geom + power
    exponent = pk_of_series(k, a).mul_by_x().truncate(order)
    if lhs != exponent.exp():
        return False
    exponent2 = geom.mul_by_x().truncate(order).scale(Fraction(1, k))
    return b == exponent2.exp()


def verify_postnikov_form(a: EgfSeries) -> bool:
    """Check 1 + A = e^{(x/2)(2+A)}."""
    ring, order = a.ring, a.order
    one = EgfSeries.one(order, ring)
    two_plus_a = one.scale(ring.from_int(2)) + a
    exponent = two_plus_a.mul_by_x().truncate(order).scale(Fraction(1, 2))
    return one + a == exponent.exp()
