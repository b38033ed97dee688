from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qdouble.scalars import (
    SYMBOLIC, CyclotomicQ, RatFunc, RationalQ, VanishingDenominator, in_localized_A, is_laurent,
    parse_mode, qbinomial, qfactorial, qint, scalar_from_json, scalar_to_json, specialize,
)

from strategies import laurent, ratfunc

v = SYMBOLIC.q
L = RatFunc.laurent


def test_qint_values():
    assert qint(0) == 0
    assert qint(2) == v + 1 / v
    assert qint(3, RationalQ(2)) == Fraction(21, 4)
    assert qint(1) == 1


def test_qfactorial_values():
    assert qfactorial(0) == 1
    assert qfactorial(2) == v + 1 / v
    assert qfactorial(3) == (v + 1 / v) * (v * v + 1 + 1 / (v * v))


def test_qbinomial_values():
    assert qbinomial(7, 0) == 1
    assert qbinomial(2, 1) == qint(2)
    assert qbinomial(4, 2) == L({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_qbinomial_negative_top_product_form():
    m, n = -3, 2
    want = SYMBOLIC.one
    for i in range(1, n + 1):
        want = want * (v ** (m - i + 1) - v ** (i - m - 1)) / (v ** i - v ** (-i))
    assert qbinomial(m, n) == want


def test_laurent_membership():
    assert is_laurent(qbinomial(5, 2))
    x = 1 / (v - 1 / v)
    assert not is_laurent(x)
    assert in_localized_A(x)
    assert in_localized_A(x ** 3 * (v + 2))
    assert not in_localized_A(1 / (v * v + 1))


def test_membership_rejects_specialized_modes():
    with pytest.raises(Exception):
        is_laurent(Fraction(1, 2))


def test_specialize_examples():
    assert specialize(v * v - 1, RationalQ(2)) == 3
    assert specialize(qint(2), CyclotomicQ(4, 1)) == 0
    with pytest.raises(VanishingDenominator):
        specialize(1 / (v ** 4 - 1), CyclotomicQ(4, 1))
    with pytest.raises(VanishingDenominator):
        specialize(1 / qfactorial(4), CyclotomicQ(8, 1))
    with pytest.raises(ValueError):
        CyclotomicQ(2, 1)


def test_rational_mode_rejects_q_squared_one():
    with pytest.raises(ValueError):
        RationalQ(-1)
    with pytest.raises(ValueError):
        RationalQ(0)


def test_cyclotomic_orders():
    f = CyclotomicQ(6, 1)
    assert f.q_order == 6 and f.q2_order == 3
    assert f.qpow(6) == f.one
    assert f.qpow(3) == -f.one
    assert f.is_root_of_unity and not SYMBOLIC.is_root_of_unity


def test_parse_mode():
    assert parse_mode("symbolic") == SYMBOLIC
    assert parse_mode("rational:3/2").q == Fraction(3, 2)
    f = parse_mode("cyclotomic:8:3")
    assert f.q == f.zeta(3)
    with pytest.raises(ValueError):
        parse_mode("bogus")


def test_canonical_text():
    assert str(qbinomial(4, 2)) == "v^4 + v^2 + 2 + v^-2 + v^-4"


@given(ratfunc())
def test_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x), SYMBOLIC) == x


@given(ratfunc(), ratfunc(), ratfunc())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1


@given(ratfunc())
def test_equal_values_hash_equal(x):
    y = (x * (v + 3)) / (v + 3)
    assert y == x and hash(y) == hash(x)


@given(st.integers(-6, 6), st.integers(0, 6))
def test_qbinomial_is_laurent(m, n):
    assert is_laurent(qbinomial(m, n))


@given(st.integers(1, 6), st.integers(1, 6))
def test_q_pascal(m, n):
    if n > m:
        return
    lhs = qbinomial(m, n)
    assert lhs == qfactorial(m) / (qfactorial(n) * qfactorial(m - n))
    assert lhs == v ** n * qbinomial(m - 1, n) + v ** (n - m) * qbinomial(m - 1, n - 1)


@given(laurent(), laurent(), st.sampled_from([RationalQ(2), RationalQ(Fraction(-1, 3)), CyclotomicQ(5, 2),
                                              CyclotomicQ(12, 1)]))
def test_specialize_is_ring_map(x, y, target):
    assert specialize(x * y, target) == specialize(x, target) * specialize(y, target)
    assert specialize(x + y, target) == specialize(x, target) + specialize(y, target)


@given(st.integers(0, 8), st.sampled_from([RationalQ(3), CyclotomicQ(7, 1)]))
def test_qint_agrees_with_specialization(n, target):
    assert qint(n, target) == specialize(qint(n), target)
