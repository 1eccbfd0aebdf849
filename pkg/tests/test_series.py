from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz.rings import QQ
from hurwitz.series import EgfSeries, SeriesError

F = Fraction


def qs(*coeffs):
    return EgfSeries(QQ, coeffs)


def exp_minus_one(order):
    return EgfSeries.exp_line(1, order) - EgfSeries.one(order)


class TestBasics:
    def test_exp_line(self):
        assert EgfSeries.exp_line(1, 3).coeffs == (1, 1, 1, 1)
        assert EgfSeries.exp_line(0, 2).coeffs == (1, 0, 0)
        assert EgfSeries.exp_line(-2, 3).coeffs == (1, -2, 4, -8)

    def test_linear_ops(self):
        e = EgfSeries.exp_line(1, 3)
        assert (e - EgfSeries.one(3)).coeffs == (0, 1, 1, 1)
        assert (e - e) == EgfSeries.zero(3)
        assert EgfSeries.basis(1, 2).scale(3).coeffs == (0, 3, 0)

    def test_order_mismatch(self):
        with pytest.raises(SeriesError):
            EgfSeries.one(3) + EgfSeries.one(4)


class TestMul:
    def test_exp_times_exp(self):
        e = EgfSeries.exp_line(1, 4)
        assert (e * e).coeffs == (1, 2, 4, 8, 16)

    def test_x_squared(self):
        x = EgfSeries.basis(1, 3)
        assert (x * x).coeffs == (0, 0, 2, 0)

    def test_identity(self):
        f = qs(3, F(1, 2), -5, 7)
        assert f * EgfSeries.one(3) == f


class TestReciprocal:
    def test_bernoulli(self):
        f = qs(*[F(1, n + 1) for n in range(5)])  # (e^x - 1)/x
        assert f.reciprocal().coeffs == (1, F(-1, 2), F(1, 6), 0, F(-1, 30))

    def test_one(self):
        assert EgfSeries.one(4).reciprocal() == EgfSeries.one(4)

    def test_exp(self):
        e = EgfSeries.exp_line(1, 5)
        assert e.reciprocal() == EgfSeries.exp_line(-1, 5)

    def test_nonunit_constant(self):
        with pytest.raises(SeriesError):
            EgfSeries.basis(1, 3).reciprocal()


class TestDivByX:
    def test_exp_minus_one(self):
        assert exp_minus_one(4).div_by_x().coeffs == (1, F(1, 2), F(1, 3), F(1, 4))

    def test_x(self):
        assert EgfSeries.basis(1, 1).div_by_x().coeffs == (1,)

    def test_nonzero_constant(self):
        with pytest.raises(SeriesError):
            EgfSeries.one(3).div_by_x()

    def test_inverts_mul_by_x(self):
        f = qs(2, -1, F(1, 3), 4)
        assert f.mul_by_x().div_by_x() == f


class TestCompose:
    def test_identity_substitution(self):
        f = qs(1, -2, F(3, 4), 5)
        assert f.compose(EgfSeries.basis(1, 3)) == f

    def test_exp_of_log(self):
        log1px = (EgfSeries.one(4) + EgfSeries.basis(1, 4)).log()
        e = EgfSeries.exp_line(1, 4)
        assert e.compose(log1px).coeffs == (1, 1, 0, 0, 0)

    def test_square_of_exp_minus_one(self):
        x2 = EgfSeries.basis(1, 3) * EgfSeries.basis(1, 3)
        g = exp_minus_one(3)
        assert x2.compose(g) == g * g
        assert x2.compose(g).coeffs == (0, 0, 2, 6)

    def test_nonzero_inner_constant(self):
        with pytest.raises(SeriesError):
            EgfSeries.one(3).compose(EgfSeries.one(3))


class TestCompInverse:
    def test_x(self):
        x = EgfSeries.basis(1, 5)
        assert x.comp_inverse() == x

    def test_exp_minus_one(self):
        inv = exp_minus_one(5).comp_inverse()
        # log(1+x): coefficients (-1)^{n-1} (n-1)!
        assert inv.coeffs == (0, 1, -1, 2, -6, 24)
        assert exp_minus_one(5).compose(inv) == EgfSeries.basis(1, 5)

    def test_preconditions(self):
        with pytest.raises(SeriesError):
            EgfSeries.one(3).comp_inverse()
        with pytest.raises(SeriesError):
            (EgfSeries.basis(1, 3) * EgfSeries.basis(1, 3)).comp_inverse()


class TestExpLog:
    def test_exp_of_zero(self):
        assert EgfSeries.zero(4).exp() == EgfSeries.one(4)

    def test_exp_of_x(self):
        assert EgfSeries.basis(1, 4).exp() == EgfSeries.exp_line(1, 4)

    def test_log_of_one_plus_x(self):
        f = EgfSeries.one(4) + EgfSeries.basis(1, 4)
        assert f.log().coeffs == (0, 1, -1, 2, -6)

    def test_preconditions(self):
        with pytest.raises(SeriesError):
            EgfSeries.one(3).exp()
        with pytest.raises(SeriesError):
            EgfSeries.zero(3).log()


class TestSubstExpMinusOne:
    def test_x(self):
        assert EgfSeries.basis(1, 4).subst_exp_minus_one() == exp_minus_one(4)

    def test_log(self):
        log1px = (EgfSeries.one(4) + EgfSeries.basis(1, 4)).log()
        assert log1px.subst_exp_minus_one() == EgfSeries.basis(1, 4)


class TestIntegrality:
    def test_integral(self):
        assert EgfSeries.exp_line(1, 5).integrality_report().integral

    def test_first_failure(self):
        f = qs(1, F(-1, 2), F(1, 6))
        report = f.integrality_report()
        assert not report.integral
        assert report.first_fail_index == 1
        assert report.fail_value == F(-1, 2)


class TestRender:
    def test_tab_format(self):
        assert qs(0, 1, F(-1, 2)).render() == "0\t0\n1\t1\n2\t-1/2"


# -- property tests --------------------------------------------------------

def integer_series(order, zero_constant=False, unit_linear=False):
    def build(values):
        coeffs = list(values)
        if zero_constant:
            coeffs[0] = 0
        if unit_linear:
            coeffs[1] = 1
        return EgfSeries(QQ, coeffs)

    return st.lists(
        st.integers(-9, 9), min_size=order + 1, max_size=order + 1
    ).map(build)


@settings(max_examples=40)
@given(integer_series(10), integer_series(10), integer_series(10))
def test_mul_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=30)
@given(
    integer_series(8),
    integer_series(8, zero_constant=True),
    integer_series(8, zero_constant=True),
)
def test_compose_associativity(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


@settings(max_examples=30)
@given(integer_series(10, zero_constant=True, unit_linear=True))
def test_comp_inverse_roundtrip(g):
    inv = g.comp_inverse()
    assert g.compose(inv) == EgfSeries.basis(1, 10)
    assert inv.comp_inverse() == g


@settings(max_examples=30)
@given(integer_series(10))
def test_reciprocal_two_sided(f):
    if f[0] == 0:
        return
    r = f.reciprocal()
    assert f * r == EgfSeries.one(10)
    assert r * f == EgfSeries.one(10)


@settings(max_examples=30)
@given(integer_series(10, zero_constant=True))
def test_exp_log_roundtrip(f):
    assert f.exp().log() == f


@settings(max_examples=40)
@given(integer_series(12), integer_series(12, zero_constant=True))
def test_hurwitz_closure(f, g):
    assert (f * g).integrality_report().integral
    assert f.compose(g).integrality_report().integral


@settings(max_examples=40)
@given(integer_series(12, zero_constant=True, unit_linear=True))
def test_hurwitz_closure_inverse(g):
    assert g.comp_inverse().integrality_report().integral
