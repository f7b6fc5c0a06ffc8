"""Orthocomplementation and the structure derived from it.

Commutation is read left to right: ``commutes(OL, l, m)`` tests
``l == (l ^ m) v (l ^ m')``, and ``commutant(OL, l)`` collects every ``m``
with that property. The center is the intersection of all commutants. On
orthomodular (in particular modular) lattices the relation is symmetric; on
others it need not be, and the checks below report that instead of assuming it.
"""
from functools import cached_property

import numpy as np

from . import kernels
from .diagnostics import Diagnostics
from .errors import (
    ComplementLawFails,
    NotAntitone,
    NotDominated,
    NotInvolution,
    OrthoError,
)
from .lattice import Lattice


class OrthoLattice(Lattice):
    """A lattice plus a validated orthocomplement ``perp``.

    Build through :func:`attach_orthocomplement`; the constructor assumes
    ``perp`` already passed :func:`validate_ortho`.
    """

    def __init__(self, lattice, perp):
        super().__init__(lattice.labels, lattice.order, lattice.meet_table, lattice.join_table)
        perp = np.array(perp, dtype=np.int32)
        perp.flags.writeable = False
        self.perp_map = perp

    @property
    def base(self):
        return Lattice(self.labels, self.order, self.meet_table, self.join_table)

    def perp(self, a):
        return int(self.perp_map[self.idx(a)])

    @cached_property
    def comm(self):
        """comm[i, j]: i commutes with j."""
        m = kernels.commutation_matrix(self.meet_table, self.join_table, self.perp_map).astype(bool)
        m.flags.writeable = False
        return m

    @cached_property
    def center_set(self):
        return frozenset(np.flatnonzero(self.comm.all(axis=0)).tolist())

    def perp_pairs(self):
        """Each involution pair once, (a, perp a) with a <= perp a by index."""
        return [(i, int(p)) for i, p in enumerate(self.perp_map) if i <= p]


def _perp_array(L, perp):
    if hasattr(perp, "items"):
        pairs = list(perp.items())
    else:
        pairs = list(perp)
    out = [-1] * L.n
    for a, b in pairs:
        a, b = L.idx(a), L.idx(b)
        for x, y in ((a, b), (b, a)):
            if out[x] not in (-1, y):
                raise NotInvolution(
                    f"{L.labels[x]} is paired with both {L.labels[out[x]]} and {L.labels[y]}",
                    (L.labels[x], L.labels[out[x]], L.labels[y]),
                )
            out[x] = y
    if out[L.bottom] == -1 and out[L.top] == -1:
        out[L.bottom], out[L.top] = L.top, L.bottom
    missing = [i for i, v in enumerate(out) if v == -1]
    if missing:
        raise NotInvolution(f"no orthocomplement given for {L.labels[missing[0]]}", (L.labels[missing[0]],))
    return np.array(out, dtype=np.int32)


def validate_ortho(L, perp):
    """Check involution, complement law, antitone and de Morgan; witnesses are indices."""
    d = Diagnostics(subject="orthocomplement")
    perp = np.asarray(perp)
    n = L.n
    idx = np.arange(n)
    bad = np.flatnonzero(perp[perp] != idx)
    d.add("involution", not len(bad), (int(bad[0]),) if len(bad) else None)
    J, M = L.join_table, L.meet_table
    bad = np.flatnonzero((J[idx, perp] != L.top) | (M[idx, perp] != L.bottom))
    d.add("complement law", not len(bad), (int(bad[0]),) if len(bad) else None)
    O = L.order
    # a <= b must give perp b <= perp a
    bad = np.argwhere(O & ~O[np.ix_(perp, perp)].T)
    d.add("antitone", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)
    bad = np.argwhere(perp[J] != M[np.ix_(perp, perp)])
    bad2 = np.argwhere(perp[M] != J[np.ix_(perp, perp)])
    if len(bad) or len(bad2):
        w = bad[0] if len(bad) else bad2[0]
        d.add("de Morgan", False, tuple(int(x) for x in w))
    else:
        d.add("de Morgan", True)
    return d


_ORTHO_ERRORS = {
    "involution": NotInvolution,
    "complement law": ComplementLawFails,
    "antitone": NotAntitone,
    "de Morgan": OrthoError,
}


def attach_orthocomplement(L, perp):
    """Validated OrthoLattice from ``L`` and involution pairs (or a mapping).

    Pairs are closed symmetrically; if neither bottom nor top is mentioned
    they are paired with each other.
    """
    arr = _perp_array(L, perp)
    d = validate_ortho(L, arr)
    fail = d.first_failure()
    if fail is not None:
        w = tuple(L.labels[i] for i in fail.witness)
        raise _ORTHO_ERRORS[fail.name](f"{fail.name} fails at {w}", w)
    return OrthoLattice(L, arr)


def orthogonal_set(OL, l):
    p = OL.perp(l)
    return frozenset(np.flatnonzero(OL.order[:, p]).tolist())


def commutes(OL, l, m):
    return bool(OL.comm[OL.idx(l), OL.idx(m)])


def commutant(OL, l):
    return frozenset(np.flatnonzero(OL.comm[OL.idx(l)]).tolist())


def center(OL):
    return OL.center_set


def is_factorial(OL):
    return center(OL) == {OL.bottom, OL.top}


def is_abelian(OL):
    return len(center(OL)) == OL.n


def relative_complement(OL, l, m):
    """``l - m = perp(m) ^ l`` for ``m <= l``."""
    l, m = OL.idx(l), OL.idx(m)
    if not OL.order[m, l]:
        raise NotDominated(f"{OL.labels[m]} is not below {OL.labels[l]}", (OL.labels[m], OL.labels[l]))
    return OL.meet(OL.perp(m), l)


def reduced_lattice(OL, l):
    """The interval ``[0, l]`` with relative complements, as a new OrthoLattice.

    The result's ``parent_index[i]`` is the index in ``OL`` of its i-th element.
    Raises ComplementLawFails when the relative complement is not an
    orthocomplement (this only happens without modularity).
    """
    l = OL.idx(l)
    sub = np.flatnonzero(OL.order[:, l])
    local = np.full(OL.n, -1, dtype=np.int32)
    local[sub] = np.arange(len(sub), dtype=np.int32)
    order = OL.order[np.ix_(sub, sub)]
    meet = local[OL.meet_table[np.ix_(sub, sub)]]
    join = local[OL.join_table[np.ix_(sub, sub)]]
    base = Lattice([OL.labels[i] for i in sub], order, meet, join)
    perp = local[OL.meet_table[OL.perp_map[sub], l]]
    d = validate_ortho(base, perp)
    fail = d.first_failure()
    if fail is not None:
        w = tuple(base.labels[i] for i in fail.witness)
        raise ComplementLawFails(f"reduced lattice at {OL.labels[l]}: {fail.name} fails at {w}", w)
    R = OrthoLattice(base, perp)
    R.parent_index = tuple(int(i) for i in sub)
    return R


def abelian_elements(OL):
    """Elements whose reduced lattice is abelian.

    An element whose interval fails to be orthocomplemented is not abelian.
    """
    out = set()
    for l in OL.elements:
        try:
            R = reduced_lattice(OL, l)
        except ComplementLawFails:
            continue
        if is_abelian(R):
            out.add(l)
    return frozenset(out)


def check_r_property(OL):
    """Compare the center of each reduced lattice with the restricted center."""
    d = Diagnostics(subject="central restriction")
    C = center(OL)
    for l in OL.elements:
        restricted = {OL.meet(c, l) for c in C}
        try:
            R = reduced_lattice(OL, l)
        except ComplementLawFails as exc:
            d.add("central restriction", False, (l,), f"interval not orthocomplemented: {exc}")
            return d
        local_center = {R.parent_index[c] for c in center(R)}
        if local_center != restricted:
            extra = sorted(local_center ^ restricted)
            d.add("central restriction", False, (l, extra[0]), "center of interval differs from restricted center")
            return d
    d.add("central restriction", True)
    return d


def inverses(L, l):
    """Complements of ``l``: join is top and meet is bottom."""
    l = L.idx(l)
    mask = (L.join_table[l] == L.top) & (L.meet_table[l] == L.bottom)
    return frozenset(np.flatnonzero(mask).tolist())


def check_ortho_laws(OL, modular):
    """Exhaustive checks of the laws that hold in orthocomplemented lattices.

    ``modular`` gates the laws whose proofs use the modular law; on
    non-modular input those are recorded as not applicable.
    """
    d = Diagnostics(subject="orthocomplement laws")
    O, C, P = OL.order, OL.comm, OL.perp_map
    M, J = OL.meet_table, OL.join_table

    # l' <= perp(l) must put l' in c(l)
    bad = np.argwhere(O[:, P].T & ~C)
    d.add("orthogonal elements commute", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)

    bad = np.argwhere(C != C.T)
    if modular:
        d.add("commutation symmetric", not len(bad), tuple(int(x) for x in bad[0]) if len(bad) else None)
    else:
        d.add("commutation symmetric", None, tuple(int(x) for x in bad[0]) if len(bad) else None,
              "not applicable: lattice is not modular" + ("; asymmetric pair found" if len(bad) else ""))

    if modular:
        w = kernels.commuting_distributive_witness(M, J, C.astype(np.uint8))
        d.add("distributive over commuting element", w[0] < 0, None if w[0] < 0 else w)
    else:
        d.add("distributive over commuting element", None, note="not applicable: lattice is not modular")

    # a, b orthogonal to l with l v a == l v b force a == b
    witness = None
    for l in OL.elements:
        orth = np.flatnonzero(O[:, P[l]])
        joins = J[l, orth]
        for k, a in enumerate(orth):
            same = orth[(joins == joins[k]) & (orth != a)]
            if len(same):
                witness = (l, int(a), int(same[0]))
                break
        if witness:
            break
    if modular:
        d.add("orthogonal cancellation", witness is None, witness)
    else:
        d.add("orthogonal cancellation", None, witness,
              "not applicable: lattice is not modular" + ("; counterexample found" if witness else ""))

    if modular:
        witness = None
        for l in OL.elements:
            got = commutant(OL, l) & inverses(OL, l)
            if got != {int(P[l])}:
                witness = (l, *sorted(got - {int(P[l])}))
                break
        d.add("commuting inverse is orthocomplement", witness is None, witness)
    else:
        d.add("commuting inverse is orthocomplement", None, note="not applicable: lattice is not modular")
    return d
