import pytest
from hypothesis import given, strategies as st

from qdouble import linalg as la
from qdouble.cartan import (
    CartanData, CartanError, cartan_A, check_matrix_rep, check_module, epsilon_vec, generator_pairing,
    matrices_from_json, pullback, rank1_as_words, rank1_simple, relations, serre_coefficients,
    sl3_fundamental, tensor_with_character, uq_tensor, with_serre_coefficients,
)
from qdouble.pairing import lower, pair, upper
from qdouble.pbw import defining_relations
from qdouble.scalars import SYMBOLIC, RationalQ

v = SYMBOLIC.q
B2 = CartanData([[2, -2], [-1, 2]], [1, 2])
G2 = CartanData([[2, -3], [-1, 2]], [1, 3])
RANK1 = CartanData([[2]], [1])
FINITE = [RANK1, cartan_A(2), cartan_A(3), B2, G2]


@pytest.mark.parametrize("a,d", [
    ([[2, -2], [-2, 2]], [1, 1]),      # affine, not positive definite
    ([[2, -1], [-2, 2]], [1, 1]),      # not symmetrizable by d
    ([[2, 1], [1, 2]], [1, 1]),        # positive off-diagonal
    ([[2, -4], [-1, 2]], [1, 4]),      # entry outside the allowed set
    ([[3]], [1]),
    ([[2, 0], [0, 2]], [1]),
])
def test_invalid_cartan_data(a, d):
    with pytest.raises(CartanError):
        CartanData(a, d)


def test_cartan_json_round_trip():
    assert CartanData.from_json(G2.to_json()) == G2
    assert CartanData.from_json({"a": [[2, -1], [-1, 2]]}) == cartan_A(2)


def test_serre_examples():
    cd = CartanData([[2, 0], [0, 2]], [1, 1])
    assert serre_coefficients(cd, 0, 1) == [1, -1]
    A2 = cartan_A(2)
    assert serre_coefficients(A2, 0, 1) == [1, -(v + 1 / v), 1]
    assert serre_coefficients(B2, 1, 0) == [1, -(v ** 2 + v ** -2), 1]
    assert serre_coefficients(B2, 0, 1) == [1, -(v ** 2 + 1 + v ** -2), v ** 2 + 1 + v ** -2, -1]


def test_serre_relation_shape():
    rels = {r.name: r for r in relations(cartan_A(2))}
    r = rels["serreE_01"]
    assert [w for _, w in r.terms] == [(("E", 0), ("E", 0), ("E", 1)), (("E", 0), ("E", 1), ("E", 0)),
                                       (("E", 1), ("E", 0), ("E", 0))]
    assert "serreF_10" in rels and "serreE_00" not in rels


def test_rank1_degenerates_to_rank1_presentation():
    words = rank1_as_words(RANK1)
    assert len(words) == len(defining_relations())
    for name, lhs, rhs in defining_relations():
        want: dict = {}
        for c, w in (lhs - rhs).terms:
            want[w] = want.get(w, SYMBOLIC.zero) + SYMBOLIC.coerce(c)
        assert {k: c for k, c in want.items() if c} == words[name], name


def test_generator_pairing_examples():
    A2 = cartan_A(2)
    assert generator_pairing(A2, 0, 1, "EF") == 0
    assert generator_pairing(A2, 0, 1, "KK") == v ** -1
    assert generator_pairing(B2, 1, 1, "KK") == v ** 4
    assert generator_pairing(B2, 1, 1, "EF") == 1 / (v ** 4 - 1)
    assert generator_pairing(RANK1, 0, 0, "EF") == pair(upper({(1, 0): 1}), lower({(1, 0): 1}))
    assert generator_pairing(RANK1, 0, 0, "KK") == pair(upper({(0, 1): 1}), lower({(0, 1): 1}))
    assert generator_pairing(RANK1, 0, 0, "KKinv") == pair(upper({(0, 1): 1}), lower({(0, -1): 1}))
    with pytest.raises(CartanError):
        generator_pairing(A2, 0, 2, "EF")
    with pytest.raises(CartanError):
        generator_pairing(A2, 0, 0, "FF")


def test_rank1_simple_passes():
    for n in range(4):
        assert check_matrix_rep(RANK1, rank1_simple(n), [v ** 2])["pass"]


def test_characters():
    triv = epsilon_vec([1, 1])
    assert check_module(cartan_A(2), triv)["pass"]
    assert all(A == [[1]] for A in triv.K + triv.Kt)
    s = [v, 3 * v ** 2]
    eps = epsilon_vec(s)
    assert [A[0][0] for A in eps.K] == s
    assert [eps.K[i][0][0] / eps.Kt[i][0][0] for i in range(2)] == [x * x for x in s]
    assert check_module(cartan_A(2), eps)["pass"]
    with pytest.raises(CartanError):
        epsilon_vec([1, 0])


def test_sl3_representations():
    A2 = cartan_A(2)
    V = sl3_fundamental()
    rep = check_matrix_rep(A2, V, [1, 1])
    assert rep["pass"] and rep["weight_module"]
    assert check_matrix_rep(A2, V, [v, SYMBOLIC.coerce(3)])["pass"]
    assert check_matrix_rep(A2, uq_tensor(V, V, SYMBOLIC), [2, v])["pass"]


def test_wrong_serre_coefficient_detected_on_tensor_square():
    A2 = cartan_A(2)
    V = sl3_fundamental()
    bad = with_serre_coefficients(relations(A2), "serreE_01", [1, -2, 1])
    # every Serre word already vanishes on the three-dimensional module
    assert check_matrix_rep(A2, V, [1, 1], rels=bad)["relations"]["serreE_01"]
    rep = check_matrix_rep(A2, uq_tensor(V, V, SYMBOLIC), [1, 1], rels=bad)
    assert rep["relations"]["serreE_01"] is False and not rep["pass"]


def test_corrupted_matrix_detected():
    V = sl3_fundamental()
    V["E"][0][0][1] = SYMBOLIC.coerce(2)
    assert not check_matrix_rep(cartan_A(2), V, [1, 1])["pass"]


def test_dimension_mismatch():
    V = sl3_fundamental()
    V["F"][1] = la.zeros(2, 2, SYMBOLIC)
    with pytest.raises(CartanError):
        check_matrix_rep(cartan_A(2), V, [1, 1])
    with pytest.raises(CartanError):
        check_matrix_rep(cartan_A(2), sl3_fundamental(), [1])


def test_matrices_from_json():
    f = RationalQ(2)
    obj = {"E": [[["0", "1"], ["0", "0"]]], "F": [[["0", "0"], ["1", "0"]]], "K": [[["2", "0"], ["0", "1/2"]]]}
    U = matrices_from_json(obj, f)
    assert U["K"][0][1][1] == f.qinv
    assert check_matrix_rep(RANK1, U, [3], f)["pass"]


@given(st.sampled_from(FINITE))
def test_serre_coefficients_palindromic_up_to_sign(cd):
    for i in range(cd.n):
        for j in range(cd.n):
            if i == j:
                continue
            c = serre_coefficients(cd, i, j)
            m = len(c) - 1
            assert m == 1 - cd.a[i][j]
            assert all(c[s] == (-1) ** m * c[m - s] for s in range(m + 1))


@given(st.sampled_from([1, 2, -3]), st.integers(-2, 2), st.sampled_from([1, -1, 5]), st.integers(-2, 2))
def test_twist_by_character(c1, e1, c2, e2):
    A2 = cartan_A(2)
    V = sl3_fundamental()
    s = [SYMBOLIC.coerce(c1) * v ** e1, SYMBOLIC.coerce(2) * v]
    t = [SYMBOLIC.coerce(c2) * v ** e2, SYMBOLIC.coerce(-1)]
    twisted = tensor_with_character(epsilon_vec(t), pullback(V, s, SYMBOLIC))
    direct = pullback(V, [a * b for a, b in zip(s, t)], SYMBOLIC)
    assert (twisted.E, twisted.F, twisted.K, twisted.Kt) == (direct.E, direct.F, direct.K, direct.Kt)
    assert check_module(A2, twisted)["pass"] == check_matrix_rep(A2, V, s)["pass"] is True
