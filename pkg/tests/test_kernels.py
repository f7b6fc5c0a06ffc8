import numpy as np
import pytest
from hypothesis import given, settings

from hilbert_lattice import kernels
from hilbert_lattice.builders import gen_hexagon, gen_horizontal_sum, gen_pentagon, gen_product
from hilbert_lattice.kernels import _pure

from .oracles import closure_lattices, naive_bounds

compiled = kernels.compiled()
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def test_backend_is_reported():
    assert kernels.BACKEND in ("compiled", "pure")
    for name in kernels.FUNCTIONS:
        assert callable(getattr(kernels, name))


@given(closure_lattices())
@settings(max_examples=60, deadline=None)
def test_bound_tables_match_naive(L):
    meet, join = _pure.bound_tables(L.order)
    m2, j2 = naive_bounds(L.order)
    assert np.array_equal(meet, m2) and np.array_equal(join, j2)


def test_bound_tables_report_missing_bounds():
    # two incomparable minimal elements: no meet
    order = np.array([[1, 0, 1], [0, 1, 1], [0, 0, 1]], dtype=bool)
    meet, join = _pure.bound_tables(order)
    assert meet[0, 1] == -1 and join[0, 1] == 2


def test_transitive_closure_of_a_path():
    rel = np.zeros((4, 4), dtype=np.uint8)
    rel[0, 1] = rel[1, 2] = rel[2, 3] = 1
    out = _pure.transitive_closure(rel)
    assert np.array_equal(out, np.triu(np.ones((4, 4), dtype=np.uint8)))


@needs_compiled
@given(closure_lattices())
@settings(max_examples=60, deadline=None)
def test_backends_agree_on_random_lattices(L):
    O = L.order.view("uint8")
    assert np.array_equal(_pure.transitive_closure(O), compiled.transitive_closure(O))
    for a, b in zip(_pure.bound_tables(L.order), compiled.bound_tables(O)):
        assert np.array_equal(a, b)
    M, J = L.meet_table, L.join_table
    assert tuple(_pure.modular_witness(O, M, J)) == tuple(compiled.modular_witness(O, M, J))
    assert tuple(_pure.distributive_witness(M, J)) == tuple(compiled.distributive_witness(M, J))
    assert tuple(_pure.pentagon_witness(O, M, J)) == tuple(compiled.pentagon_witness(O, M, J))


@needs_compiled
@pytest.mark.parametrize("make", [gen_hexagon, lambda: gen_horizontal_sum(4),
                                  lambda: gen_product([gen_horizontal_sum(2), gen_horizontal_sum(1)])])
def test_backends_agree_on_ortho_kernels(make):
    OL = make()
    M, J, P = OL.meet_table, OL.join_table, OL.perp_map
    c1 = _pure.commutation_matrix(M, J, P)
    c2 = compiled.commutation_matrix(M, J, P)
    assert np.array_equal(c1, c2)
    assert tuple(_pure.commuting_distributive_witness(M, J, c1)) == tuple(
        compiled.commuting_distributive_witness(M, J, c2))


@needs_compiled
def test_backends_agree_on_pentagon_witness():
    L = gen_pentagon()
    O = L.order.view("uint8")
    w = tuple(compiled.modular_witness(O, L.meet_table, L.join_table))
    assert w == tuple(_pure.modular_witness(O, L.meet_table, L.join_table)) == (1, 3, 2)


@needs_compiled
def test_backends_agree_on_missing_bounds():
    from hilbert_lattice.builders import two_generator_diagram_poset

    O = two_generator_diagram_poset().order
    for a, b in zip(_pure.bound_tables(O), compiled.bound_tables(O)):
        assert np.array_equal(a, b)
    assert (_pure.bound_tables(O)[1] < 0).any()
