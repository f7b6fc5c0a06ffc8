"""Finite posets and lattices with materialized meet/join tables.

Elements are addressed by integer index ``0..n-1``; every element also has a
string label. Methods accept either an index or a label and return indices.

>>> L = build_from_covers(["0", "a", "b", "1"],
...                       [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
>>> L.label(L.join("a", "b"))
'1'
"""
from functools import reduce

import numpy as np

from . import kernels
from .diagnostics import Diagnostics
from .errors import CycleDetected, NoBottomTop, NoUniqueBound, UnknownElement

CONTINUITY_WAIVER = "join/meet continuity along nets holds automatically: every net in a finite lattice stabilizes"


class Poset:
    """Finite relation closed reflexively and transitively; antisymmetry is not assumed."""

    def __init__(self, labels, order):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        order = np.array(order, dtype=bool)
        order.flags.writeable = False
        self.labels = labels
        self.order = order
        self.n = len(labels)
        self._index = {x: i for i, x in enumerate(labels)}

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"{type(self).__name__}({self.n} elements)"

    @property
    def elements(self):
        return range(self.n)

    def idx(self, x):
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return int(x)
            raise UnknownElement(f"no element with index {x}", (x,))
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}", (x,)) from None

    def label(self, i):
        return self.labels[self.idx(i)]

    def leq(self, a, b):
        return bool(self.order[self.idx(a), self.idx(b)])

    def covers(self):
        """Hasse-diagram pairs (a, b), a covered by b, in index order."""
        lt = self.order.copy()
        np.fill_diagonal(lt, False)
        between = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
        cov = lt & ~between
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(cov))]


class Lattice(Poset):
    """Finite lattice. Immutable once built."""

    def __init__(self, labels, order, meet_table, join_table):
        super().__init__(labels, order)
        meet_table = np.array(meet_table, dtype=np.int32)
        join_table = np.array(join_table, dtype=np.int32)
        meet_table.flags.writeable = False
        join_table.flags.writeable = False
        self.meet_table = meet_table
        self.join_table = join_table
        bottoms = np.flatnonzero(self.order.all(axis=1))
        tops = np.flatnonzero(self.order.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            raise NoBottomTop("lattice needs a unique bottom and top")
        self.bottom = int(bottoms[0])
        self.top = int(tops[0])

    @classmethod
    def from_order(cls, labels, order):
        """Lattice from a complete order matrix, raising if it is not a lattice."""
        P = Poset(labels, order)
        diag = validate_complete_lattice(P)
        fail = diag.first_failure()
        if fail is not None:
            raise _ERROR_FOR[fail.name](f"{fail.name} fails: {fail.note}", tuple(P.labels[i] for i in fail.witness))
        meet, join = kernels.bound_tables(P.order)
        return cls(P.labels, P.order, meet, join)

    def meet(self, a, b):
        return int(self.meet_table[self.idx(a), self.idx(b)])

    def join(self, a, b):
        return int(self.join_table[self.idx(a), self.idx(b)])

    def meet_all(self, S):
        return reduce(lambda x, y: int(self.meet_table[x, y]), (self.idx(s) for s in S), self.top)

    def join_all(self, S):
        return reduce(lambda x, y: int(self.join_table[x, y]), (self.idx(s) for s in S), self.bottom)

    def down(self, a):
        return frozenset(np.flatnonzero(self.order[:, self.idx(a)]).tolist())

    def up(self, a):
        return frozenset(np.flatnonzero(self.order[self.idx(a)]).tolist())

    def atoms(self):
        """Elements covering bottom, in index order."""
        below = self.order.sum(axis=0)
        return [int(i) for i in np.flatnonzero(below == 2)]

    def is_minimal(self, a):
        return int(self.order[:, self.idx(a)].sum()) == 2

    def ranks(self):
        """Length of the longest chain from bottom to each element."""
        order_idx = np.argsort(self.order.sum(axis=0), kind="stable")
        rank = [0] * self.n
        for b in order_idx:
            for a in np.flatnonzero(self.order[:, b]):
                if a != b:
                    rank[b] = max(rank[b], rank[a] + 1)
        return rank

    def labels_of(self, S):
        return [self.labels[i] for i in sorted(S)]


def _closure(n, pairs):
    rel = np.zeros((n, n), dtype=np.uint8)
    for a, b in pairs:
        rel[a, b] = 1
    return kernels.transitive_closure(rel).astype(bool)


def poset_from_covers(elements, covers):
    """Reflexive-transitive closure of the cover pairs, without validation."""
    labels = [str(e) for e in elements]
    if len(set(labels)) != len(labels):
        raise ValueError("element ids must be distinct")
    index = {x: i for i, x in enumerate(labels)}
    pairs = []
    for a, b in covers:
        try:
            pairs.append((index[str(a)], index[str(b)]))
        except KeyError as exc:
            raise UnknownElement(f"cover references unknown element {exc.args[0]!r}", (exc.args[0],)) from None
    return Poset(labels, _closure(len(labels), pairs))


def validate_complete_lattice(P):
    """Per-axiom diagnostics for a finite poset candidate.

    Witnesses are element indices. Continuity is recorded as satisfied
    without search (finite case).
    """
    d = Diagnostics(subject="complete lattice")
    R = P.order
    n = P.n
    both = R & R.T
    np.fill_diagonal(both, False)
    cyc = np.argwhere(both)
    refl = bool(np.all(np.diag(R)))
    trans = bool(np.all(((R.astype(np.int32) @ R.astype(np.int32)) > 0) <= R))
    if len(cyc):
        d.add("partial order", False, (int(cyc[0][0]), int(cyc[0][1])), "antisymmetry fails")
    elif not (refl and trans):
        d.add("partial order", False, None, "relation not reflexive and transitive")
    else:
        d.add("partial order", True)
    if len(cyc):
        d.add("bounds", None, note="skipped: not a partial order")
        d.add("meets and joins", None, note="skipped: not a partial order")
        d.add("continuity", None, note="skipped: not a partial order")
        return d

    bottoms = np.flatnonzero(R.all(axis=1))
    tops = np.flatnonzero(R.all(axis=0))
    if len(bottoms) == 1 and len(tops) == 1:
        d.add("bounds", True)
    else:
        # witness: two minimal (resp. maximal) elements
        strict = R.copy()
        np.fill_diagonal(strict, False)
        if len(bottoms) != 1:
            mins = np.flatnonzero(~strict.any(axis=0))
            d.add("bounds", False, tuple(int(x) for x in mins[:2]), "no unique bottom")
        else:
            maxs = np.flatnonzero(~strict.any(axis=1))
            d.add("bounds", False, tuple(int(x) for x in maxs[:2]), "no unique top")

    if n:
        meet, join = kernels.bound_tables(R)
        bad = np.argwhere((meet < 0) | (join < 0))
        if len(bad):
            i, j = (int(x) for x in bad[0])
            which = "greatest lower bound" if meet[i, j] < 0 else "least upper bound"
            d.add("meets and joins", False, (i, j), f"no {which}")
        else:
            d.add("meets and joins", True)
    else:
        d.add("meets and joins", False, None, "empty poset")
    d.add("continuity", True, note=CONTINUITY_WAIVER)
    return d


_ERROR_FOR = {
    "partial order": CycleDetected,
    "bounds": NoBottomTop,
    "meets and joins": NoUniqueBound,
}


def build_from_covers(elements, covers):
    """Lattice whose order is generated by the cover pairs ``(a, b)``, a < b.

    Raises CycleDetected, NoBottomTop or NoUniqueBound (witness: labels).
    """
    P = poset_from_covers(elements, covers)
    return Lattice.from_order(P.labels, P.order)


def meet_all(L, S):
    """Meet of a set of elements; the empty meet is top."""
    return L.meet_all(S)


def join_all(L, S):
    """Join of a set of elements; the empty join is bottom."""
    return L.join_all(S)
