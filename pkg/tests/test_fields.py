import random

import pytest

from conductor_workbench.errors import ValidationError
from conductor_workbench.fields import (PrimeField, RatFunc, RationalFunctionField,
                                        poly_gcd, poly_mul)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.add(3, 5) == 1
    assert F.mul(3, 5) == 1
    assert F.neg(2) == 5
    assert F.inv(3) == 5
    assert F.div(1, 3) == 5
    assert F.is_zero(7)


def test_prime_field_rejects_composite():
    with pytest.raises(ValidationError):
        PrimeField(6)
    with pytest.raises(ValidationError):
        RationalFunctionField(9)


def test_rational_function_canonical_form():
    K = RationalFunctionField(2)
    # (t^2 + t) / t reduces to t + 1
    x = K.make((0, 1, 1), (0, 1))
    assert x == RatFunc((1, 1), (1,))
    # denominator is normalized monic
    K3 = RationalFunctionField(3)
    y = K3.make((1,), (2,))
    assert y.den == (1,)
    assert y.num == (2,)  # 1/2 = 2 in F_3


def test_rational_function_field_axioms_randomized():
    K = RationalFunctionField(2)
    rng = random.Random(1)

    def rand_elem():
        num = tuple(rng.randrange(2) for _ in range(rng.randint(1, 3)))
        den = tuple(rng.randrange(2) for _ in range(rng.randint(1, 3)))
        if not any(den):
            den = (1,)
        return K.make(num, den)

    for _ in range(200):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert K.add(a, b) == K.add(b, a)
        assert K.mul(a, b) == K.mul(b, a)
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        assert K.add(a, K.neg(a)) == K.zero
        if not K.is_zero(a):
            assert K.mul(a, K.inv(a)) == K.one


def test_poly_gcd_is_monic():
    g = poly_gcd((0, 2), (2,), 3)  # gcd(2t, 2) = 1
    assert g == (1,)
    h = poly_gcd(poly_mul((1, 1), (0, 1), 2), (0, 1), 2)  # gcd(t^2+t, t) = t
    assert h == (0, 1)


def test_render():
    K = RationalFunctionField(2)
    assert K.render(K.t) == "t"
    assert K.render(K.make((1, 1), (0, 1))) == "(t + 1)/(t)"
    F = PrimeField(5)
    assert F.render(9) == "4"
