import random

import pytest

from hilbert_lattice.builders import (
    decompose_central, dedekind_macneille, gen_boolean, gen_chain, gen_hexagon, gen_horizontal_sum,
    gen_pentagon, gen_product, gen_two_generator_ortho, gen_signature, is_isomorphic, random_signature,
    two_generator_diagram_poset,
)
from hilbert_lattice.errors import NotModular, TooLarge
from hilbert_lattice.modularity import check_modular
from hilbert_lattice.ortho import OrthoLattice, attach_orthocomplement, is_abelian, is_factorial, validate_ortho


def test_boolean_sizes():
    assert gen_boolean(1).labels == ("0", "1")
    B = gen_boolean(2)
    assert B.labels == ("0", "a", "b", "1") and B.label(B.perp("a")) == "b"
    B3 = gen_boolean(3)
    assert B3.n == 8 and is_abelian(B3) and not is_factorial(B3)
    with pytest.raises(TooLarge):
        gen_boolean(13)
    with pytest.raises(TooLarge):
        gen_boolean(0)


def test_horizontal_sums():
    assert gen_horizontal_sum(1).n == 4 and is_abelian(gen_horizontal_sum(1))
    for m in (2, 3, 8):
        L = gen_horizontal_sum(m)
        assert L.n == 2 * m + 2 and is_factorial(L)
    with pytest.raises(TooLarge):
        gen_horizontal_sum(65)


def test_fixed_examples():
    assert gen_pentagon().n == 5
    H = gen_hexagon()
    assert validate_ortho(H, H.perp_map).ok
    assert gen_two_generator_ortho().n == 16


def test_completion_adds_two_joins():
    S = gen_two_generator_ortho()
    new = [x for x in S.labels if x.startswith("v(")]
    assert new == ["v(x^y,1-(xvy))", "v(x^(1-y),y^(1-x))"]
    assert S.label(S.perp(new[0])) == new[1]


def test_completion_of_a_lattice_is_itself():
    L = gen_horizontal_sum(2)
    C = dedekind_macneille(L, L.perp_pairs())
    assert is_isomorphic(L, C) is not None


def test_products():
    chain = gen_boolean(1)
    assert is_isomorphic(gen_product([chain, chain]), gen_boolean(2)) is not None
    assert is_isomorphic(gen_product([chain] * 4), gen_boolean(4)) is not None
    P = gen_product([gen_horizontal_sum(2), gen_boolean(1)])
    assert P.n == 12 and P.modular
    with pytest.raises(TooLarge):
        gen_product([gen_boolean(7), gen_boolean(6)])


def test_large_product_infers_modularity():
    P = gen_product([gen_horizontal_sum(3), gen_boolean(5)])
    assert P.n == 256 and P.modular


def test_non_ortho_product_is_a_lattice():
    P = gen_product([gen_pentagon(), gen_chain(2)])
    assert not isinstance(P, OrthoLattice) and not check_modular(P)


def test_isomorphism():
    L = gen_horizontal_sum(3)
    assert is_isomorphic(L, L) == {i: i for i in L.elements}
    assert is_isomorphic(gen_boolean(2), gen_horizontal_sum(2)) is None
    assert is_isomorphic(gen_boolean(2), gen_horizontal_sum(1)) is not None
    with pytest.raises(TooLarge):
        is_isomorphic(gen_boolean(7), gen_boolean(7))


def test_isomorphism_respects_orthocomplement():
    L = gen_horizontal_sum(2)
    # same order, pairs l1-l2 and 1-l1 - 1-l2: the identity no longer works
    M = attach_orthocomplement(L.base, [("l1", "l2"), ("1-l1", "1-l2")])
    f = is_isomorphic(L, M)
    assert f is not None and f != {i: i for i in L.elements}
    assert all(M.perp_map[f[a]] == f[int(L.perp_map[a])] for a in L.elements)


def test_central_decompositions():
    assert decompose_central(gen_boolean(3)).to_dict() == {"boolean_exponent": 3, "sum_sizes": []}
    assert decompose_central(gen_horizontal_sum(3)).to_dict() == {"boolean_exponent": 0, "sum_sizes": [3]}
    P = gen_product([gen_boolean(1), gen_horizontal_sum(2)])
    assert decompose_central(P).to_dict() == {"boolean_exponent": 1, "sum_sizes": [2]}


def test_decompose_requires_modularity():
    with pytest.raises(NotModular):
        decompose_central(gen_hexagon())


def test_round_trip_on_random_signatures():
    rng = random.Random(7)
    for _ in range(10):
        e, sums = random_signature(rng)
        sig = decompose_central(gen_signature(e, sums))
        assert (sig.boolean_exponent, sig.sum_sizes) == (e, sums)


def test_diagram_poset_is_the_drawn_one():
    P = two_generator_diagram_poset()
    assert P.n == 14 and len(P.covers()) == 24


def test_gen_signature_empty():
    assert gen_signature(0, ()).n == 1
    assert decompose_central(gen_signature(0, ())).to_dict() == {"boolean_exponent": 0, "sum_sizes": []}


