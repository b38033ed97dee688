import itertools
import random

import pytest
from hypothesis import given, strategies as st

from qdouble import linalg as la
from qdouble.pairing import lower, upper
from qdouble.pbw import PBWElement
from qdouble.rep import ModuleError, check_relations, simple, z0_module
from qdouble.scalars import CyclotomicQ, RationalQ
from qdouble.taft import (
    TaftError, block_structure_ok, build_taft_double, determinant, gram_matrix, hopf_ideal_check,
    is_simple_brute_force, kills_ideal, nondegenerate, radical_membership, reduce_mod_ideal,
    simple_inventory, taft_field, vandermonde_form_ok,
)


@pytest.fixture(scope="module")
def taft2():
    return build_taft_double(2)


def test_taft_field_choices():
    assert taft_field(3).q_order == 6
    assert taft_field(3, q_order=3).q2_order == 3
    with pytest.raises(TaftError):
        taft_field(4, q_order=4)
    with pytest.raises(TaftError):
        taft_field(1)
    with pytest.raises(TaftError):
        build_taft_double(3, CyclotomicQ(8, 1))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_dimension(d):
    assert build_taft_double(d).dimension == d ** 4


def test_quotient_relations(taft2):
    g = taft2.generators()
    assert taft2.power(g["K"], 2) == taft2.element((0, 0, 0, 0))
    assert not taft2.multiply(g["E"], taft2.element((1, 0, 0, 0)))
    assert taft2.check_relations()["pass"]


@pytest.mark.parametrize("d", [3, 4])
def test_quotient_relations_larger(d):
    rep = build_taft_double(d).check_relations()
    assert rep["pass"], rep["relations"]


def test_quotient_relations_with_q_of_order_d():
    assert build_taft_double(3, taft_field(3, q_order=3)).check_relations()["pass"]


def test_reduction():
    f = taft_field(2)
    x = PBWElement.monomial(a=1, c=3, d=-1, b=1, field=f) + PBWElement.monomial(a=2, field=f)
    assert reduce_mod_ideal(x, 2) == PBWElement.monomial(a=1, c=1, d=1, b=1, field=f)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hopf_ideal(d):
    assert all(hopf_ideal_check(d).values())


def test_associativity_on_random_triples(taft2):
    rng = random.Random(5)
    basis = taft2.basis()
    f = taft2.field
    triples = []
    for _ in range(25):
        xs = []
        for _ in range(3):
            m1, m2 = rng.choice(basis), rng.choice(basis)
            xs.append(taft2.element(m1) + taft2.element(m2, f.q))
        triples.append(tuple(xs))
    assert taft2.check_associativity(triples)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_radical_examples(d):
    f = taft_field(d)
    assert radical_membership(upper({(d, 0): 1}, f), d)
    assert radical_membership(lower({(d, 0): 1}, f), d)
    assert radical_membership(upper({(0, d): 1, (0, 0): -1}, f), d)
    assert radical_membership(lower({(0, d): 1, (0, 0): -1}, f), d)
    assert not radical_membership(upper({(1, 0): 1}, f), d)
    assert not radical_membership(lower({(0, 1): 1}, f), d)


def test_radical_needs_root_of_unity():
    with pytest.raises(TaftError):
        radical_membership(upper({(1, 0): 1}, RationalQ(2)), 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_gram_matrix(d):
    G = gram_matrix(d)
    assert len(G.matrix) == d * d
    assert nondegenerate(G)
    assert block_structure_ok(G)
    assert vandermonde_form_ok(G)


def test_gram_off_diagonal_blocks_zero():
    G = gram_matrix(3)
    for a, a2 in itertools.product(range(3), repeat=2):
        if a != a2:
            assert la.is_zero(G.block(a, a2))
    assert determinant(G) != 0


def test_inventory_d2():
    inv = simple_inventory(2, lambdas=[2])
    dims = sorted((e.label[0], e.module.dim) for e in inv)
    assert dims == [("L", 1), ("L", 1), ("L", 2), ("L", 2), ("Z", 2), ("Z", 2)]
    for e in inv:
        assert e.relations_ok and e.simple
        assert e.ideal["E^d"] and e.ideal["F^d"]


def test_l1_plus_is_simple_at_d2():
    f = taft_field(2)
    assert is_simple_brute_force(simple(f.qpow(-1), 1, 1, f))


def test_z_family_rejects_lambda_with_trivial_power():
    f = taft_field(3)
    with pytest.raises(ModuleError):
        z0_module(1, 1, f.q, 3, f)
    with pytest.raises(ModuleError):
        z0_module(1, 1, -1, 3, f)


@pytest.mark.parametrize("d", [2, 3])
def test_l_modules_kill_the_ideal(d):
    for e in simple_inventory(d):
        assert all(e.ideal.values()), e.label
        assert e.simple


@pytest.mark.parametrize("d", [2, 3])
def test_z_modules_group_part_is_lambda_power(d):
    """K^d Kt^d acts as lambda^(2d) on the Z-family, which the family excludes from being 1."""
    f = taft_field(d)
    for lam in (f.coerce(2), f.q + 2):
        M = z0_module(f.coerce(3), 1, lam, d, f)
        assert all(k ** d * kt ** d == lam ** (2 * d) for k, kt in zip(M.k_weights, M.kt_weights))
        assert is_simple_brute_force(M)
        assert check_relations(M)["pass"]


@pytest.mark.xfail(strict=True, reason="K^d and Kt^d cannot both act trivially when lambda^(2d) != 1")
@pytest.mark.parametrize("d", [2, 3])
def test_every_inventory_module_kills_the_ideal(d):
    f = taft_field(d)
    for e in simple_inventory(d, lambdas=[f.coerce(2), f.q + 2]):
        assert all(e.ideal.values()), e.label


@given(st.integers(2, 4), st.integers(0, 3), st.sampled_from([1, -1]))
def test_inventory_l_modules_property(d, n, sign):
    if n >= d:
        return
    f = taft_field(d)
    M = simple(f.qpow(-n) * sign, n, sign, f)
    assert check_relations(M)["pass"]
    assert all(kills_ideal(M, d).values())
