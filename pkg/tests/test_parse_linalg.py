from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from qdouble import linalg as la
from qdouble.parse import ParseError, parse_element, parse_scalar
from qdouble.pbw import UQ, PBWElement
from qdouble.scalars import SYMBOLIC, CyclotomicQ, RationalQ

v = SYMBOLIC.q
Q = RationalQ(2)


def test_parse_elements():
    assert parse_element("E F") == parse_element("E*F") == PBWElement.monomial(a=1, b=1)
    assert parse_element("K^-1 K") == PBWElement.scalar(1)
    assert parse_element("Kinv") == parse_element("K^-1")
    assert parse_element("(v + 1) * Kt^2") == PBWElement.monomial(d=2, coeff=v + 1)
    assert parse_element("2*E - E*2") == PBWElement()
    assert parse_element("KE") == parse_element("K*E")
    assert parse_element("K*E", UQ, Q) == PBWElement.monomial(a=1, c=1, coeff=Fraction(4), algebra=UQ, field=Q)


@pytest.mark.parametrize("text", ["E +", "KX", "(E", "E^-1", "Kt", "x"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_element(text, UQ if text == "Kt" else "Dq")


def test_parse_scalars():
    assert parse_scalar("1/(v^2-1)") == 1 / (v * v - 1)
    assert parse_scalar("q^-1 + 3") == 1 / v + 3
    assert parse_scalar("-5/4", Q) == Fraction(-5, 4)
    f = CyclotomicQ(6, 1)
    assert parse_scalar("z^3", f) == -f.one


def _det_naive(A):
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = (-1) ** sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(sign)
        for i in range(n):
            term *= A[i][perm[i]]
        total += term
    return total


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3).map(Fraction), min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices)
def test_bareiss_matches_permutation_expansion(A):
    assert la.det_bareiss(A, Q) == _det_naive(A)


@given(matrices)
def test_rank_nullity(A):
    n = len(A)
    ns = la.nullspace(A, Q, ncols=n)
    assert la.rank(A, Q) + len(ns) == n
    for vec in ns:
        assert not any(la.apply(A, vec, Q))


def test_kron_and_powers():
    A = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    I = la.identity(2, Q)
    assert la.kron(A, I, Q)[1][3] == 2
    assert la.mat_pow(A, 3, Q) == [[1, 6], [0, 1]]
    assert la.mat_eq(la.mat_mul(A, I, Q), A)
