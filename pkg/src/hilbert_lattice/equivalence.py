"""Equivalence relations on finite lattices: perspectivity, regularity, division.

A relation is stored as a partition with canonical class ids (numbered by
first occurrence in index order), so two relations are equal iff their
``class_of`` tuples are equal.

Comparability is checked in two parts: at least one of ``l ~ m``,
``l <=~ m``, ``m <=~ l`` holds, and at most one of ``l ~ m``, ``l <~ m``,
``m <~ l`` holds, where ``<~`` is domination through a strictly smaller
element. Read literally with ``<=~`` the exclusivity clause could never hold,
since ``l ~ m`` already gives ``l <=~ m``.
"""
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .diagnostics import Diagnostics
from .errors import NotModular, NotRegular, TooLarge
from .modularity import check_modular


class EquivRelation:
    def __init__(self, owner, class_of):
        if len(class_of) != owner.n:
            raise ValueError("class_of must cover every element")
        renum = {}
        self.class_of = tuple(renum.setdefault(c, len(renum)) for c in class_of)
        self.owner = owner
        groups = [[] for _ in renum]
        for i, c in enumerate(self.class_of):
            groups[c].append(i)
        self.classes = tuple(frozenset(g) for g in groups)
        self.closure_needed = False

    @classmethod
    def from_classes(cls, owner, classes):
        class_of = [-1] * owner.n
        for k, members in enumerate(classes):
            for x in members:
                i = owner.idx(x)
                if class_of[i] != -1:
                    raise ValueError(f"{owner.labels[i]} appears in two classes")
                class_of[i] = k
        if -1 in class_of:
            raise ValueError("classes must cover every element")
        return cls(owner, class_of)

    @classmethod
    def equality(cls, owner):
        return cls(owner, range(owner.n))

    def __eq__(self, other):
        return isinstance(other, EquivRelation) and self.class_of == other.class_of

    def __hash__(self):
        return hash(self.class_of)

    def __repr__(self):
        parts = ["{" + ",".join(self.owner.labels[i] for i in sorted(c)) + "}" for c in self.classes]
        return f"EquivRelation({' '.join(parts)})"

    def cls(self, a):
        return self.class_of[self.owner.idx(a)]

    def same(self, a, b):
        return self.cls(a) == self.cls(b)

    def labelled_classes(self):
        return [[self.owner.labels[i] for i in sorted(c)] for c in self.classes]

    @cached_property
    def matrix(self):
        c = np.array(self.class_of)
        return c[:, None] == c[None, :]

    @cached_property
    def dominated(self):
        """dominated[i, j]: some element below j is equivalent to i."""
        S = self.matrix.astype(np.int32)
        return (S @ self.owner.order.astype(np.int32)) > 0

    @cached_property
    def strictly_dominated(self):
        strict = self.owner.order.copy()
        np.fill_diagonal(strict, False)
        return (self.matrix.astype(np.int32) @ strict.astype(np.int32)) > 0


def perspectivity(L):
    """Elements are related when they have a common inverse, closed transitively.

    ``closure_needed`` records whether the raw relation was not already an
    equivalence (missing reflexive pairs or transitivity).
    """
    inv = (L.join_table == L.top) & (L.meet_table == L.bottom)
    raw = (inv.astype(np.int32) @ inv.T.astype(np.int32)) > 0
    sym = raw | raw.T
    closed = kernels.transitive_closure(sym.astype(np.uint8)).astype(bool)
    class_of = [-1] * L.n
    k = 0
    for i in range(L.n):
        if class_of[i] < 0:
            for j in np.flatnonzero(closed[i]):
                class_of[j] = k
            k += 1
    rel = EquivRelation(L, class_of)
    rel.closure_needed = bool((closed != raw).any())
    return rel


def sim_dominates(rel, l, m):
    """``l <=~ m``: some element below ``m`` is equivalent to ``l``."""
    L = rel.owner
    return bool(rel.dominated[L.idx(l), L.idx(m)])


def strictly_sim_dominates(rel, l, m):
    """``l <~ m``: some element strictly below ``m`` is equivalent to ``l``."""
    L = rel.owner
    return bool(rel.strictly_dominated[L.idx(l), L.idx(m)])


def orthogonal_families(OL, cap=None):
    """Families of nonzero, mutually orthogonal elements (as sorted tuples).

    With ``cap`` only families up to that size are enumerated, plus every
    greedily completed maximal family.
    """
    cache = OL.__dict__.setdefault("_orth_family_cache", {})
    if cap in cache:
        return cache[cap]
    orth = OL.order[:, OL.perp_map]  # orth[i, j]: i <= perp(j)
    nonzero = [i for i in OL.elements if i != OL.bottom]
    out = []

    def grow(fam, cands):
        out.append(tuple(fam))
        if cap is not None and len(fam) >= cap:
            return
        for k, c in enumerate(cands):
            grow(fam + [c], [d for d in cands[k + 1:] if orth[c, d]])

    for k, s in enumerate(nonzero):
        grow([s], [d for d in nonzero[k + 1:] if orth[s, d]])
    if cap is not None:
        seen = set(out)
        for s in nonzero:
            fam = [s]
            for d in nonzero:
                if d not in fam and all(orth[d, f] for f in fam):
                    fam.append(d)
            t = tuple(sorted(fam))
            if t not in seen:
                seen.add(t)
                out.append(t)
    cache[cap] = out
    return out


def verify_regular(OL, rel, family_cap=4):
    """Diagnostics for the five regularity axioms; ``family_cap=None`` checks
    every orthogonal family."""
    d = Diagnostics(subject="regular equivalence")
    S = rel.matrix
    dom = rel.dominated
    sdom = rel.strictly_dominated
    O = OL.order
    lab = OL.labels

    zero_class = rel.classes[rel.class_of[OL.bottom]]
    others = sorted(zero_class - {OL.bottom})
    d.add("nondegenerate", not others, (others[0],) if others else None)

    # i >= j and i <=~ j must give i ~ j
    bad = np.argwhere(O.T & dom & ~S)
    d.add("order compatible", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)

    bad = np.argwhere(~(S | dom | dom.T))
    d.add("comparable", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)
    count = S.astype(int) + sdom.astype(int) + sdom.T.astype(int)
    bad = np.argwhere(count > 1)
    d.add("exclusive", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)

    zc = rel.class_of[OL.bottom]
    seen = {(): ((), OL.bottom)}  # the empty family joins to bottom
    witness = note = None
    for fam in orthogonal_families(OL, family_cap):
        key = tuple(sorted(c for c in (rel.class_of[x] for x in fam) if c != zc))
        j = OL.join_all(fam)
        first = seen.setdefault(key, (fam, j))
        if rel.class_of[first[1]] != rel.class_of[j]:
            witness = (first[1], j)
            note = (f"families {{{','.join(lab[x] for x in first[0])}}} and "
                    f"{{{','.join(lab[x] for x in fam)}}} are termwise equivalent, joins are not")
            break
    d.add("orthogonal additivity", witness is None, witness,
          note or ("all orthogonal families" if family_cap is None else f"families up to size {family_cap} plus greedy maximal ones"))

    strict_below = O.copy()
    np.fill_diagonal(strict_below, False)
    bad = np.argwhere(strict_below & S)
    d.add("finite", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)
    return d


def iter_set_partitions(n):
    """All partitions of ``range(n)`` as restricted-growth class lists."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield list(a)
            return
        for c in range(m + 1):
            a[i] = c
            yield from rec(i + 1, m + (c == m))

    # m counts the classes opened so far
    yield from rec(1, 1)


def _antichain_partitions(OL):
    """Partitions whose classes are antichains; the rest cannot be regular."""
    n = OL.n
    comparable = OL.order | OL.order.T
    a = [0] * n
    classes = []

    def rec(i):
        if i == n:
            yield list(a)
            return
        for c, members in enumerate(classes):
            if not any(comparable[i, x] for x in members):
                a[i] = c
                members.append(i)
                yield from rec(i + 1)
                members.pop()
        a[i] = len(classes)
        classes.append([i])
        yield from rec(i + 1)
        classes.pop()

    yield from rec(0)


@dataclass
class RegularScan:
    relations: list = field(default_factory=list)
    scanned: int = 0
    pruned: bool = True


def scan_regular_relations(OL, size_cap=12, prune=True):
    """Brute-force search for regular relations with full family checking.

    With ``prune`` only partitions into antichains are generated (finiteness
    rules out the others); without it every set partition is tested.
    """
    if OL.n > size_cap:
        raise TooLarge(f"{OL.n} elements exceeds the enumeration cap {size_cap}")
    scan = RegularScan(pruned=prune)
    source = _antichain_partitions(OL) if prune else iter_set_partitions(OL.n)
    for class_of in source:
        scan.scanned += 1
        rel = EquivRelation(OL, class_of)
        if verify_regular(OL, rel, family_cap=None).ok:
            scan.relations.append(rel)
    return scan


def enumerate_regular_relations(OL, size_cap=12):
    return scan_regular_relations(OL, size_cap).relations


def _greedy_divide(OL, rel, b, members, reverse):
    r = b
    n = 0
    while True:
        cands = [a for a in members if OL.order[a, r]]
        if not cands:
            return n, rel.class_of[r]
        a = max(cands) if reverse else min(cands)
        r = int(OL.meet_table[OL.perp_map[a], r])
        n += 1


def class_divide(OL, rel, B, A, check=True):
    """``(n, B1)`` with ``B = nA + B1`` and ``B1`` strictly below ``A``.

    Every representative of ``B`` is divided greedily under both tie-breaks;
    disagreement means the relation is not regular.
    """
    if A == rel.class_of[OL.bottom]:
        raise ValueError("cannot divide by the class of bottom")
    if check:
        if not check_modular(OL):
            raise NotModular("class division needs a modular lattice")
        diag = verify_regular(OL, rel)
        if not diag.ok:
            raise NotRegular(f"relation is not regular: {diag.first_failure().name}", diag.first_failure().witness)
    members = sorted(rel.classes[A])
    results = {(_greedy_divide(OL, rel, b, members, rev)) for b in sorted(rel.classes[B]) for rev in (False, True)}
    if len(results) != 1:
        raise NotRegular(f"division is not unique: {sorted(results)}", tuple(sorted(results)))
    n, B1 = results.pop()
    below = any(rel.strictly_dominated[b1, a] for b1 in rel.classes[B1] for a in rel.classes[A])
    if not below:
        raise NotRegular("remainder class is not strictly below the divisor", (B1, A))
    return n, B1


def check_equivalence_laws(OL, rel):
    """Consequences of regularity, checked exhaustively."""
    d = Diagnostics(subject="regular relation consequences")
    S, dom, O = rel.matrix, rel.dominated, OL.order
    # l ~ m and k <= l must give k <=~ m
    witness = None
    for l, m in zip(*np.nonzero(S)):
        below = np.flatnonzero(O[:, l])
        bad = below[~dom[below, m]]
        if len(bad):
            witness = (int(bad[0]), int(l), int(m))
            break
    d.add("domination passes to smaller elements", witness is None, witness)

    witness = None
    M, J, P = OL.meet_table, OL.join_table, OL.perp_map
    for l in OL.elements:
        for m in OL.elements:
            lm = J[l, m]
            left = M[P[l], lm]  # (l v m) - l
            right = M[P[M[l, m]], m]  # m - (l ^ m)
            if not S[left, right]:
                witness = (l, m)
                break
        if witness:
            break
    d.add("parallelogram", witness is None, witness)

    atoms = set(OL.atoms())
    witness = None
    for c in rel.classes:
        if c & atoms and not c <= atoms:
            witness = (min(c & atoms), min(c - atoms))
            break
    d.add("minimal classes pure", witness is None, witness)
    return d
