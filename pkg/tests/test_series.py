import random

import pytest

from conductor_workbench.errors import NotDivisibleError, PrecisionError
from conductor_workbench.fields import PrimeField, RationalFunctionField
from conductor_workbench.series import AtLeast, BaseDVR, dvr_valuation


def test_valuation_examples(f2_base):
    R = BaseDVR(PrimeField(2), 8)
    x = R.pi(3) + R.pi(5)
    assert dvr_valuation(x) == 3
    assert dvr_valuation(R.one() + R.pi()) == 0
    sentinel = dvr_valuation(R.zero())
    assert isinstance(sentinel, AtLeast) and sentinel.n == 8
    assert str(sentinel) == ">=8"


def test_valuation_additive_randomized(f2t_base):
    rng = random.Random(5)
    K = f2t_base.field

    def rand(nonzero_val):
        coeffs = [K.zero] * f2t_base.precision
        v = rng.randint(0, 5)
        for j in range(v, min(v + 4, f2t_base.precision)):
            coeffs[j] = K.from_poly([rng.randrange(2), rng.randrange(2)])
        coeffs[v] = K.one if K.is_zero(coeffs[v]) else coeffs[v]
        return f2t_base.element(coeffs)

    for _ in range(100):
        x, y = rand(rng), rand(rng)
        vx, vy = x.valuation(), y.valuation()
        assert (x * y).valuation() == vx + vy


def test_exactness_tracking():
    R = BaseDVR(PrimeField(3), 6)
    x = R.pi(2)
    assert x.prec is None
    y = x + R.one()
    assert y.prec is None
    # dividing by pi^2 costs two known coefficients unless the divisor is an
    # exact monomial (here it is, so the quotient stays exact)
    q = (R.pi(4)).divide(R.pi(2))
    assert q == R.pi(2) and q.prec is None
    # dividing by a non-monomial unit keeps N known coefficients at most
    u = R.one() + R.pi()
    w = R.one().divide(u)
    assert w.prec == 6
    assert (w * u - R.one()).is_zero_at_precision()


def test_division_errors():
    R = BaseDVR(PrimeField(2), 5)
    with pytest.raises(NotDivisibleError):
        R.pi().divide(R.pi(2))
    with pytest.raises(ZeroDivisionError):
        R.one().divide(R.zero())
    with pytest.raises(PrecisionError):
        R.one().divide(R.unknown_zero(3))


def test_truncation_marks_inexact():
    R = BaseDVR(PrimeField(2), 4)
    x = R.element([0, 0, 0, 0, 1])  # pi^4 is beyond the precision
    assert x.prec == 4
    assert x.is_zero_at_precision() and not x.is_exact_zero()


def test_unit_inverse_round_trip(f2t_base):
    K = f2t_base.field
    u = f2t_base.from_field(K.t) + f2t_base.pi()  # valuation 0, messy unit
    w = u.unit_inverse()
    assert (u * w - f2t_base.one()).is_zero_at_precision()


def test_char_two_negation_is_identity():
    R = BaseDVR(RationalFunctionField(2), 8)
    x = R.pi() + R.from_field(R.field.t)
    assert -x == x


def test_render():
    R = BaseDVR(RationalFunctionField(2), 8)
    x = R.pi(2) * R.from_field(R.field.t) + R.one()
    assert x.render() == "1 + t*pi^2"
    assert R.unknown_zero(3).render() == "0 + O(pi^3)"
