import itertools

from hypothesis import given

from qdouble.hopf import antipode
from qdouble.pairing import (
    DoubleElement, check_pairing_axioms, double_coproduct, double_generators, double_multiply,
    double_tensor_multiply, lower, pair, pair_closed, pair_closed_printed, psi_inverse, psi_transport, upper,
)
from qdouble.pbw import DQ, UQ, PBWElement, defining_relations
from qdouble.scalars import SYMBOLIC, RationalQ, qfactorial

from strategies import borel, pbw_element

v = SYMBOLIC.q
one_u = PBWElement.scalar(1, UQ)
pure = DoubleElement.pure


def word_in_double(w, gens):
    total = None
    for coeff, letters in w.terms:
        acc = DoubleElement.one().scale(coeff if not isinstance(coeff, int) else SYMBOLIC.coerce(coeff))
        for letter in letters:
            acc = double_multiply(acc, gens[letter])
        total = acc if total is None else total + acc
    return total


def test_pair_examples():
    assert pair(upper({(1, 0): 1}), lower({(1, 0): 1})) == 1 / (v * v - 1)
    assert pair(upper({(1, 0): 1}), lower({(0, 1): 1})) == 0
    assert pair(upper({(1, 1): 1}), lower({(1, 0): 1})) == v ** -2 / (v * v - 1)
    assert pair(upper({(0, 1): 1}), lower({(0, 1): 1})) == v * v
    assert pair(upper({(0, 1): 1}), lower({(0, -1): 1})) == v ** -2


def test_pair_closed_examples():
    assert pair_closed(1, 0, 1, 0) == 1 / (v * v - 1)
    assert pair_closed(0, 1, 0, -1) == v ** -2
    e2 = pair(upper({(2, 0): 1}), lower({(2, 0): 1}))
    assert pair_closed(2, 0, 2, 0) == e2
    assert e2 == qfactorial(2) * (1 / (v * v - 1)) ** 2 / v
    assert pair_closed(2, 1, 3, 0) == 0


def test_closed_form_matches_recursion_on_grid():
    for a, b, b2 in itertools.product(range(6), range(-4, 5), range(-4, 5)):
        got = pair(upper({(a, b): 1}), lower({(a, b2): 1}))
        assert got == pair_closed(a, b, a, b2), (a, b, b2)


def test_printed_closed_form_diagnostic(capsys):
    """The closed form printed for the root-of-unity argument disagrees with the recursion.

    Logged together with both values; the recursion is normative.
    """
    rec = pair(upper({(1, 0): 1}), lower({(1, 0): 1}))
    printed = pair_closed_printed(1, 0, 0)
    print(f"phi(E, F): recursion {rec}, printed closed form {printed}")
    assert printed == -rec
    rec_k = pair(upper({(0, 1): 1}), lower({(0, 1): 1}))
    assert pair_closed_printed(0, 1, 1) == v ** -2 and rec_k == v ** 2
    mismatches = sum(
        pair_closed_printed(a, b, b2) != pair_closed(a, b, a, b2)
        for a, b, b2 in itertools.product(range(6), range(-4, 5), range(-4, 5)))
    print(f"printed closed form mismatches on {mismatches} of 486 grid points")
    assert mismatches > 0


def test_pair_rational_mode_agrees():
    f = RationalQ(3)
    for a, b, b2 in [(0, 1, 2), (2, -1, 1), (3, 0, 0)]:
        assert pair(upper({(a, b): 1}, f), lower({(a, b2): 1}, f)) == pair_closed(a, b, a, b2, f)


def test_double_examples():
    x = pure(upper({(1, 1): 1}), one_u)
    x2 = pure(upper({(2, 0): 1}), one_u)
    assert double_multiply(x, x2) == pure(upper({(1, 1): 1}) * upper({(2, 0): 1}), one_u)
    lhs = double_multiply(pure(one_u, lower({(0, 1): 1})), pure(upper({(1, 0): 1}), one_u))
    assert lhs == pure(upper({(1, 0): 1}), lower({(0, 1): 1})).scale(v * v)
    e1 = pure(upper({(1, 0): 1}), one_u)
    qf = pure(one_u, lower({(1, 0): 1})).scale(v)
    comm = double_multiply(e1, qf) - double_multiply(qf, e1)
    want = (pure(upper({(0, 1): 1}), one_u) - pure(one_u, lower({(0, -1): 1}))).scale(1 / (v - 1 / v))
    assert comm == want


def test_psi_examples():
    F = PBWElement.generator("F")
    assert psi_transport(F) == pure(one_u, lower({(1, 0): 1})).scale(v)
    assert psi_transport(PBWElement.scalar(1)) == DoubleElement.one()
    assert psi_transport(PBWElement.monomial(a=1, d=1)) == pure(upper({(1, 0): 1}), lower({(0, 1): 1}))


def test_psi_is_a_homomorphism_on_relations():
    gens = double_generators()
    for name, lhs, rhs in defining_relations():
        assert word_in_double(lhs, gens) == word_in_double(rhs, gens), name


def test_double_coproduct_multiplicative_on_generators():
    gens = double_generators()
    for a, b in itertools.product(["E", "F", "K", "Kt"], repeat=2):
        lhs = double_coproduct(double_multiply(gens[a], gens[b]))
        rhs = double_tensor_multiply(double_coproduct(gens[a]), double_coproduct(gens[b]), SYMBOLIC)
        assert {k: c for k, c in lhs.items() if c} == {k: c for k, c in rhs.items() if c}, (a, b)


def test_double_json_round_trip():
    u = psi_transport(PBWElement.monomial(a=2, c=-1, d=1, b=1, coeff=v + 3))
    assert DoubleElement.from_json(u.to_json(), SYMBOLIC) == u


@given(borel(True), borel(True), borel(False), borel(False))
def test_pairing_axioms(x, x2, y, y2):
    assert all(check_pairing_axioms(x, x2, y, y2).values())


@given(pbw_element(max_terms=2, max_deg=1), pbw_element(max_terms=2, max_deg=1), pbw_element(max_terms=1, max_deg=1))
def test_double_matches_presented_product_and_is_associative(x, y, z):
    px, py, pz = psi_transport(x), psi_transport(y), psi_transport(z)
    assert psi_inverse(double_multiply(px, py)) == x * y
    assert double_multiply(double_multiply(px, py), pz) == double_multiply(px, double_multiply(py, pz))


@given(pbw_element())
def test_psi_round_trip(x):
    assert psi_inverse(psi_transport(x)) == x
