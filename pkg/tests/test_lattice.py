import numpy as np
import pytest

from hilbert_lattice.builders import two_generator_diagram_poset
from hilbert_lattice.errors import CycleDetected, NoBottomTop, NoUniqueBound, UnknownElement
from hilbert_lattice.lattice import Poset, build_from_covers, poset_from_covers, validate_complete_lattice

DIAMOND = (["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def test_diamond_tables():
    L = build_from_covers(*DIAMOND)
    assert L.label(L.meet("a", "b")) == "0"
    assert L.label(L.join("a", "b")) == "1"
    assert L.labels_of(L.atoms()) == ["a", "b"]
    assert (L.bottom, L.top) == (0, 3)
    assert L.ranks() == [0, 1, 1, 2]


def test_covers_round_trip():
    L = build_from_covers(*DIAMOND)
    assert [(L.labels[a], L.labels[b]) for a, b in L.covers()] == DIAMOND[1]


def test_empty_meet_and_join():
    L = build_from_covers(*DIAMOND)
    assert L.meet_all([]) == L.top
    assert L.join_all([]) == L.bottom
    assert L.label(L.join_all(["a", "b"])) == "1"


def test_unknown_element():
    L = build_from_covers(*DIAMOND)
    with pytest.raises(UnknownElement):
        L.idx("c")
    with pytest.raises(UnknownElement):
        L.idx(9)
    with pytest.raises(UnknownElement):
        build_from_covers(["0", "1"], [("0", "2")])


def test_cycle_is_rejected():
    with pytest.raises(CycleDetected) as exc:
        build_from_covers(["0", "a", "b", "1"], [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])
    assert set(exc.value.witness) == {"a", "b"}


def test_two_minimal_elements():
    with pytest.raises(NoBottomTop):
        build_from_covers(["a", "b", "1"], [("a", "1"), ("b", "1")])


def test_missing_join_is_reported():
    # a, b below both c and d: no least upper bound
    elems = ["0", "a", "b", "c", "d", "1"]
    covers = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(NoUniqueBound):
        build_from_covers(elems, covers)


def test_diagram_as_drawn_is_not_a_lattice():
    d = validate_complete_lattice(two_generator_diagram_poset())
    assert d["partial order"].ok and d["bounds"].ok
    assert d["meets and joins"].ok is False


def test_continuity_is_waived_with_a_note():
    d = validate_complete_lattice(poset_from_covers(*DIAMOND))
    assert d.ok and d["continuity"].ok and "finite" in d["continuity"].note


def test_poset_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        Poset(["a", "a"], np.eye(2, dtype=bool))


def test_one_element_lattice():
    L = build_from_covers(["0"], [])
    assert L.bottom == L.top == 0
    assert L.atoms() == []
