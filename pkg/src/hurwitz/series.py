"""Truncated exponential-generating-function arithmetic over a coefficient ring.

An :class:`EgfSeries` of order N stores coefficients c_0..c_N of the series
sum c_n x^n / n!.  With this normalization the product is a binomial
convolution and "all coefficients are integers" is literally "every c_n has
denominator 1", which is the predicate the whole package certifies.

All operations are pure and check ring/order compatibility; nothing truncates
silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Optional

from .rings import QQ


class SeriesError(ValueError):
    """Precondition or ring/order compatibility failure."""


class IntegralityReport(NamedTuple):
    integral: bool
    first_fail_index: Optional[int] = None
    fail_value: object = None


class EgfSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        shown = ", ".join(self.ring.render(c) for c in self.coeffs)
        return f"EgfSeries[{self.ring.name}]([{shown}])"

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order, ring=QQ):
        return cls(ring, [ring.zero] * (order + 1))

    @classmethod
    def one(cls, order, ring=QQ):
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def basis(cls, n, order, ring=QQ):
        """x^n / n! as an EGF: the single coefficient c_n = 1."""
        if n > order:
            raise SeriesError(f"basis index {n} exceeds order {order}")
        coeffs = [ring.zero] * (order + 1)
        coeffs[n] = ring.one
        return cls(ring, coeffs)

    @classmethod
    def exp_line(cls, slope, order, ring=QQ):
        """e^{slope * x}: coefficients slope^n.  Slope may be any ring element."""
        slope = ring.coerce(slope)
        coeffs = [ring.one]
        for _ in range(order):
            coeffs.append(coeffs[-1] * slope)
        return cls(ring, coeffs)

    # -- ring-compatibility plumbing --------------------------------------

    def _check(self, other):
        if self.ring is not other.ring:
            raise SeriesError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}"
            )
        if self.order != other.order:
            raise SeriesError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def with_coefficient(self, n, value):
        """Copy with coefficient n replaced (used by fault injection)."""
        coeffs = list(self.coeffs)
        coeffs[n] = value
        return EgfSeries(self.ring, coeffs)

    def truncate(self, order):
        if order > self.order:
            raise SeriesError("cannot extend a truncated series")
        return EgfSeries(self.ring, self.coeffs[: order + 1])

    def extend(self, order):
        """Pad with zero coefficients up to the given order."""
        if order < self.order:
            raise SeriesError("extend cannot shrink a series")
        return EgfSeries(
            self.ring, self.coeffs + (self.ring.zero,) * (order - self.order)
        )

    # -- linear operations -------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return EgfSeries(
            self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return EgfSeries(
            self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return EgfSeries(self.ring, [-c for c in self.coeffs])

    def scale(self, c):
        c = self.ring.coerce(c)
        return EgfSeries(self.ring, [c * a for a in self.coeffs])

    # -- multiplicative structure ------------------------------------------

    def __mul__(self, other):
        """Binomial convolution: (fg)_n = sum_j C(n,j) f_j g_{n-j}."""
        self._check(other)
        f, g = self.coeffs, other.coeffs
        out = []
        for n in range(self.order + 1):
            acc = self.ring.zero
            for j in range(n + 1):
                acc = acc + comb(n, j) * f[j] * g[n - j]
            out.append(acc)
        return EgfSeries(self.ring, out)

    def reciprocal(self):
        """g with self * g = 1, by triangular back-substitution."""
        ring = self.ring
        c0 = self.coeffs[0]
        if not ring.is_unit(c0):
            raise SeriesError("constant term is not a unit")
        inv0 = ring.invert(c0)
        g = [inv0]
        for n in range(1, self.order + 1):
            acc = ring.zero
            for j in range(n):
                acc = acc + comb(n, j) * g[j] * self.coeffs[n - j]
            g.append(-(inv0 * acc))
        return EgfSeries(ring, g)

    def div_by_x(self):
        """f/x for f with zero constant term: order drops by one and
        c'_n = c_{n+1} / (n+1)."""
        if not self.ring.is_zero(self.coeffs[0]):
            raise SeriesError("not divisible by x")
        if self.order == 0:
            raise SeriesError("order too small to divide by x")
        return EgfSeries(
            self.ring,
            [self.coeffs[n + 1] / (n + 1) for n in range(self.order)],
        )

    def mul_by_x(self):
        """x * f, raising the order by one: c'_{n+1} = (n+1) c_n."""
        coeffs = [self.ring.zero]
        for n, c in enumerate(self.coeffs):
            coeffs.append((n + 1) * c)
        return EgfSeries(self.ring, coeffs)

    # -- composition -------------------------------------------------------

    def compose(self, inner):
        """self(inner(x)) for inner with zero constant term.

        Accumulates f_m * inner^m / m!; since inner has no constant term the
        x^n coefficient of inner^m vanishes for m > n, so the loop is finite.
        """
        self._check(inner)
        ring = self.ring
        if not ring.is_zero(inner.coeffs[0]):
            raise SeriesError("compose requires inner constant term 0")
        order = self.order
        result = EgfSeries.one(order, ring).scale(self.coeffs[0])
        power = EgfSeries.one(order, ring)
        for m in range(1, order + 1):
            power = power * inner
            term = power.scale(self.coeffs[m] * Fraction(1, factorial(m)))
            result = result + term
        return result

    def comp_inverse(self):
        """g with g(self(x)) = x (hence also self(g(x)) = x), solved order
        by order.

        Expanding g(f) = sum_m g_m f^m / m!, coefficient n of the equation
        g(f) = x is linear in g_n with slope f_1^n, a unit; the powers of f
        are computed once up front.
        """
        ring = self.ring
        if self.order < 1 or not ring.is_zero(self.coeffs[0]):
            raise SeriesError("compositional inverse requires constant term 0")
        if not ring.is_unit(self.coeffs[1]):
            raise SeriesError("compositional inverse requires unit linear term")
        order = self.order
        powers = [EgfSeries.one(order, ring)]
        for _ in range(order):
            powers.append(powers[-1] * self)
        g = [ring.zero] * (order + 1)
        for n in range(1, order + 1):
            target = ring.one if n == 1 else ring.zero
            acc = ring.zero
            for m in range(1, n):
                acc = acc + g[m] * powers[m][n] * Fraction(1, factorial(m))
            lead = powers[n][n] * Fraction(1, factorial(n))  # = f_1^n
            g[n] = ring.invert(lead) * (target - acc)
        return EgfSeries(ring, g)

    # -- exp / log ---------------------------------------------------------

    def exp(self):
        """e^f for f with zero constant term, from y' = f' y, y(0) = 1."""
        ring = self.ring
        if not ring.is_zero(self.coeffs[0]):
            raise SeriesError("exp requires constant term 0")
        y = [ring.one]
        for n in range(self.order):
            acc = ring.zero
            for j in range(n + 1):
                acc = acc + comb(n, j) * self.coeffs[j + 1] * y[n - j]
            y.append(acc)
        return EgfSeries(ring, y)

    def log(self):
        """log f for f with constant term 1, as the antiderivative of f'/f."""
        ring = self.ring
        if not ring.is_one(self.coeffs[0]):
            raise SeriesError("log requires constant term 1")
        if self.order == 0:
            return EgfSeries.zero(0, ring)
        deriv = EgfSeries(ring, self.coeffs[1:])
        quot = deriv * self.truncate(self.order - 1).reciprocal()
        return EgfSeries(ring, (ring.zero,) + quot.coeffs)

    def subst_exp_minus_one(self):
        """Compose with e^x - 1."""
        ring = self.ring
        em1 = EgfSeries.exp_line(ring.one, self.order, ring) - EgfSeries.one(
            self.order, ring
        )
        return self.compose(em1)

    # -- integrality and rendering ----------------------------------------

    def integrality_report(self) -> IntegralityReport:
        for n, c in enumerate(self.coeffs):
            if not self.ring.is_integral(c):
                return IntegralityReport(False, n, c)
        return IntegralityReport(True)

    def render(self) -> str:
        """One coefficient per line, "n<TAB>c_n"."""
        return "\n".join(
            f"{n}\t{self.ring.render(c)}" for n, c in enumerate(self.coeffs)
        )
