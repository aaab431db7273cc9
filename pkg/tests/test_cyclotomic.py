"""Exact scalar arithmetic tests, including frozen small-value oracles."""

import random
from fractions import Fraction

import pytest

from hopfcheck.cyclotomic import (
    Cyclotomic,
    cyc_from_json,
    cyclotomic_polynomial,
    phi_degree,
    q_factorial,
    q_int,
    root_of_unity,
)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_phi_degree():
    assert [phi_degree(n) for n in [1, 2, 3, 4, 5, 6, 12]] == [1, 1, 2, 2, 4, 2, 4]


def test_third_root_relations():
    z = root_of_unity(3)
    assert z**3 == 1
    assert 1 + z + z**2 == 0
    assert z.inverse() == z**2
    assert (z**2).inverse() == z


def test_root_orders():
    for order in [1, 2, 3, 4, 5, 6, 8, 12]:
        for e in range(order):
            from math import gcd

            w = root_of_unity(order, e)
            assert w.multiplicative_order() == order // gcd(order, e)


def test_rational_field_ops():
    a = Cyclotomic.from_fraction(Fraction(3, 4))
    b = Cyclotomic.from_fraction(Fraction(-2, 5))
    assert (a + b).rational_value() == Fraction(7, 20)
    assert (a * b).rational_value() == Fraction(-3, 10)
    assert (a / b).rational_value() == Fraction(-15, 8)
    assert a - a == 0
    assert not (a - a)


def test_mixed_order_coercion():
    z3 = root_of_unity(3)
    m1 = root_of_unity(2)  # -1 at order 2
    assert m1 == -1
    assert z3 * m1 == -z3
    z6 = root_of_unity(6)
    assert z6**3 == -1
    assert z6**2 == z3
    assert z6 == -(z3**2)  # zeta_6 = -zeta_3^2


def test_field_axioms_random():
    rng = random.Random(20240801)
    for order in [1, 2, 3, 4, 5, 6]:
        deg = phi_degree(order)

        def rand():
            num = tuple(rng.randint(-9, 9) for _ in range(deg))
            return Cyclotomic(order, num, rng.randint(1, 7))

        for _ in range(40):
            a, b, c = rand(), rand(), rand()
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a
            if a:
                assert a * a.inverse() == 1
            if b:
                assert (a / b) * b == a


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(3).inverse()
    with pytest.raises(ZeroDivisionError):
        _ = 1 / Cyclotomic.zero(5)


def test_q_int_at_one_is_n():
    one = Cyclotomic.one()
    for n in range(21):
        assert q_int(n, one) == n


def test_q_int_geometric_series():
    # (n)_w * (w - 1) == w^n - 1 for any root w
    for order in [2, 3, 5, 6]:
        w = root_of_unity(order)
        for n in range(8):
            assert q_int(n, w) * (w - 1) == w**n - 1


def test_q_factorial_small_oracle():
    # (2)_w! = 1 + w by direct expansion
    w = root_of_unity(3, 2)  # zeta_3 inverse
    assert q_factorial(2, w) == 1 + w
    assert q_factorial(0, w) == 1
    assert q_factorial(1, w) == 1


def test_q_factorial_vanishing_at_p():
    for p in [2, 3, 5]:
        z = root_of_unity(p)
        assert q_factorial(p, z) == 0
        assert q_factorial(p - 1, z) != 0
        assert q_factorial(p - 1, z**(p - 1)) != 0  # inverse root too


def test_power_negative_exponent():
    z = root_of_unity(5)
    assert z**-1 == z**4
    assert (z + 1) ** -1 == (z + 1).inverse()


def test_json_round_trip():
    rng = random.Random(7)
    for order in [1, 2, 3, 4, 5, 6]:
        deg = phi_degree(order)
        for _ in range(20):
            x = Cyclotomic(
                order,
                tuple(rng.randint(-50, 50) for _ in range(deg)),
                rng.randint(1, 12),
            )
            assert cyc_from_json(x.to_json()) == x
    assert cyc_from_json(Cyclotomic.zero(3).to_json()) == 0


def test_json_shape():
    z = root_of_unity(3)
    obj = (z / 2).to_json()
    assert obj == {"order": 3, "coeffs": [["0", "1"], ["1", "2"]]}


def test_normalization_canonical():
    a = Cyclotomic(3, (2, 4), 6)
    b = Cyclotomic(3, (1, 2), 3)
    assert a.num == b.num and a.den == b.den


def test_lift_preserves_value():
    z3 = root_of_unity(3)
    lifted = z3.lift(12)
    assert lifted.order == 12
    assert lifted == z3
    assert lifted**3 == 1
