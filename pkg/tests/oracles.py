"""Slow, independent reference implementations used to cross-check the library."""
from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from hilbert_lattice.lattice import Lattice


def naive_bounds(order):
    """Meet/join tables by scanning all lower/upper bounds, -1 when absent."""
    n = len(order)
    meet = np.full((n, n), -1, dtype=np.int32)
    join = np.full((n, n), -1, dtype=np.int32)
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if order[c][a] and order[c][b]]
            glb = [c for c in lower if all(order[d][c] for d in lower)]
            upper = [c for c in range(n) if order[a][c] and order[b][c]]
            lub = [c for c in upper if all(order[c][d] for d in upper)]
            if len(glb) == 1:
                meet[a, b] = glb[0]
            if len(lub) == 1:
                join[a, b] = lub[0]
    return meet, join


def naive_modular(L):
    M, J, O = L.meet_table, L.join_table, L.order
    return all(
        M[J[l, m], u] == J[l, M[m, u]]
        for l in L.elements for m in L.elements for u in L.elements if O[l, u]
    )


def naive_has_pentagon(L):
    """Any five elements forming N5, found by trying every triple."""
    O, M, J = L.order, L.meet_table, L.join_table
    for x in L.elements:
        for y in L.elements:
            if x == y or not O[x, y]:
                continue
            for z in L.elements:
                if O[z, x] or O[x, z] or O[z, y] or O[y, z]:
                    continue
                if M[y, z] == M[x, z] and J[x, z] == J[y, z]:
                    return True
    return False


def naive_commutes(OL, a, b):
    M, J, P = OL.meet_table, OL.join_table, OL.perp_map
    return J[M[a, b], M[a, P[b]]] == a


def block_partitions(items):
    """Partitions by inserting each item into an existing block or a new one."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in block_partitions(rest):
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1:]
        yield [[first]] + p


BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def closure_lattice(k, sets):
    """Lattice of the intersection closure of ``sets`` plus the full set, ordered by inclusion."""
    full = (1 << k) - 1
    fam = {full} | set(sets)
    changed = True
    while changed:
        changed = False
        for a, b in combinations(list(fam), 2):
            if a & b not in fam:
                fam.add(a & b)
                changed = True
    elems = sorted(fam, key=lambda s: (bin(s).count("1"), s))
    order = np.array([[a & b == a for b in elems] for a in elems])
    return Lattice.from_order([f"s{s}" for s in elems], order)


@st.composite
def closure_lattices(draw, max_atoms=5, max_sets=8):
    k = draw(st.integers(1, max_atoms))
    sets = draw(st.lists(st.integers(0, (1 << k) - 1), max_size=max_sets))
    return closure_lattice(k, sets)
