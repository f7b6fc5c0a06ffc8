"""Minimal elements, references and the dimension function of type-I lattices.

The dimension of an element is the number of pieces in a greedy
decomposition into mutually orthogonal minimal elements, divided by the size
of a reference (a maximal orthogonal family of minimals). The axioms a
dimension function must satisfy are then checked exhaustively rather than
assumed.

Finite lattices and :class:`~hilbert_lattice.subspace.SubspaceLattice` are
both accepted where it makes sense; on the latter minimal elements are lines
and decompositions come from Gram-Schmidt.
"""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .equivalence import EquivRelation, orthogonal_families, perspectivity, verify_regular
from .errors import AxiomFails, NoMinimalBelow, NotFactorial, NotMinimal, NotModular
from .lattice import CONTINUITY_WAIVER
from .modularity import check_modular
from .ortho import OrthoLattice, abelian_elements, check_r_property, inverses, is_factorial
from .subspace import SubspaceLattice, s_ortho_decompose

CARDINALITY_WAIVER = "cardinality of the continuum: waived (finite model)"


def minimal_elements(L):
    """Atoms of a finite lattice."""
    return frozenset(L.atoms())


def is_minimal_pairwise(L, l):
    """``l != 0`` and ``l ^ x`` is bottom or ``l`` for every ``x``."""
    l = L.idx(l)
    row = L.meet_table[l]
    return l != L.bottom and bool(np.all((row == L.bottom) | (row == l)))


def min_below(L, l):
    l = L.idx(l)
    return frozenset(a for a in L.atoms() if L.order[a, l])


def is_irreducible(L):
    """Every element other than the bounds has zero or several inverses."""
    return all(len(inverses(L, l)) != 1 for l in L.elements if l not in (L.bottom, L.top))


def is_type_I(OL):
    """Factorial ortholattice with a nonzero abelian element."""
    if isinstance(OL, SubspaceLattice):
        return True  # every line is abelian: its interval is a 2-chain
    if not is_factorial(OL):
        raise NotFactorial(tuple(sorted(OL.center_set)))
    return bool(abelian_elements(OL) - {OL.bottom})


def _greedy(OL, r, reverse, first=None):
    atoms = OL.atoms()
    out = []
    while r != OL.bottom:
        if first is not None:
            m, first = first, None
        else:
            cands = [a for a in atoms if OL.order[a, r]]
            if not cands:
                raise NoMinimalBelow(f"no minimal element below {OL.labels[r]}", (OL.labels[r],))
            m = max(cands) if reverse else min(cands)
        out.append(m)
        r = int(OL.meet_table[OL.perp_map[m], r])
    return out


def decompose_minimal_orthogonal(OL, l, reverse=False):
    """Mutually orthogonal minimal elements joining to ``l``.

    Greedy: take the first (``reverse``: last) minimal element below the
    remainder and replace the remainder by its relative complement.
    """
    if isinstance(OL, SubspaceLattice):
        return s_ortho_decompose(l, reverse)
    if not getattr(OL, "modular", None) and not check_modular(OL):
        raise NotModular("orthogonal decomposition needs a modular ortholattice")
    l = OL.idx(l)
    fam = _greedy(OL, l, reverse)
    if OL.join_all(fam) != l:
        raise AxiomFails("decomposition", tuple(OL.labels[x] for x in fam),
                         f"pieces do not join to {OL.labels[l]}")
    return fam


def find_reference(OL, start=None):
    """A maximal orthogonal family of minimal elements; it joins to top.

    ``start`` forces the first member, which must be minimal.
    """
    if isinstance(OL, SubspaceLattice):
        if start is None:
            return s_ortho_decompose(OL.top)
        if start.dim != 1:
            raise NotMinimal("reference must start from a line", (start,))
        rest = s_ortho_decompose(OL.perp(start))
        return [start] + rest
    if start is not None:
        start = OL.idx(start)
        if not OL.is_minimal(start):
            raise NotMinimal(f"{OL.labels[start]} is not minimal", (OL.labels[start],))
    fam = _greedy(OL, OL.top, False, first=start)
    if OL.join_all(fam) != OL.top:
        raise AxiomFails("reference", tuple(OL.labels[x] for x in fam), "reference does not join to top")
    return fam


@dataclass
class DimensionTable:
    owner: object
    n: int
    dim_of: dict  # element index -> Fraction
    type_tag: str = ""

    def __post_init__(self):
        if not self.type_tag:
            self.type_tag = f"I_{self.n}"

    def __getitem__(self, x):
        return self.dim_of[self.owner.idx(x)]

    def image(self):
        return sorted(set(self.dim_of.values()))

    def by_label(self):
        return {self.owner.labels[i]: v for i, v in self.dim_of.items()}


def _fail(OL, axiom, witness, message=""):
    w = None if witness is None else tuple(OL.labels[int(i)] for i in witness)
    raise AxiomFails(axiom, w, message)


def dimension_function(OL, rel=None, family_cap=4):
    """Dimension function by decomposition counting, with every axiom verified.

    ``rel`` defaults to perspectivity. Raises NotFactorial or AxiomFails
    naming the first precondition or axiom that fails.
    """
    if not isinstance(OL, OrthoLattice):
        raise AxiomFails("ortho", None, "an orthocomplement is required")
    mod = check_modular(OL)
    if not mod:
        _fail(OL, "modular", mod.witness, "lattice is not modular")
    if not is_factorial(OL):
        raise NotFactorial(tuple(OL.labels[i] for i in sorted(OL.center_set)))
    r = check_r_property(OL)
    if not r.ok:
        _fail(OL, "r_property", r.first_failure().witness, "central restriction fails")
    rel = rel if rel is not None else perspectivity(OL)
    reg = verify_regular(OL, rel, family_cap)
    if not reg.ok:
        f = reg.first_failure()
        _fail(OL, "regular", f.witness, f"relation is not regular: {f.name}")
    if not is_type_I(OL):
        _fail(OL, "type_I", None, "no nonzero abelian element")

    ref = find_reference(OL)
    n = len(ref)
    counts = np.zeros(OL.n, dtype=np.int64)
    for l in OL.elements:
        a = decompose_minimal_orthogonal(OL, l)
        b = decompose_minimal_orthogonal(OL, l, reverse=True)
        if len(a) != len(b):
            _fail(OL, "well-defined", (l,), "decompositions of different size")
        counts[l] = len(a)
    for s in OL.atoms():
        if len(find_reference(OL, s)) != n:
            _fail(OL, "reference size", (s,), "references of different size")

    if counts[OL.bottom] != 0 or counts[OL.top] != n:
        _fail(OL, "D1", (OL.bottom, OL.top), "normalization")
    M, J = OL.meet_table, OL.join_table
    bad = np.argwhere(counts[J] + counts[M] != counts[:, None] + counts[None, :])
    if len(bad):
        _fail(OL, "D2", bad[0], "valuation equation")
    bad = np.argwhere((counts[:, None] == counts[None, :]) != rel.matrix)
    if len(bad):
        _fail(OL, "D3", bad[0], "equal dimension differs from equivalence")
    bad = np.argwhere((counts[:, None] <= counts[None, :]) != rel.dominated)
    if len(bad):
        _fail(OL, "D4", bad[0], "dimension order differs from domination")
    for fam in orthogonal_families(OL, family_cap):
        if counts[list(fam)].sum() != counts[OL.join_all(fam)]:
            _fail(OL, "D5", fam, "not additive on an orthogonal family")
    if set(counts.tolist()) != set(range(n + 1)):
        _fail(OL, "image", None, f"image is not {{0, 1/{n}, ..., 1}}")
    return DimensionTable(OL, n, {l: Fraction(int(counts[l]), n) for l in OL.elements})


@dataclass
class Classification:
    type_tag: str
    n: int | None = None
    failed_stage: str | None = None
    reason: str = ""
    witness: tuple | None = None
    stages: list = field(default_factory=list)
    waivers: list = field(default_factory=list)
    dimension: DimensionTable | None = None
    relation: EquivRelation | None = None


STAGES = ("lattice", "modular", "ortho", "factorial", "r_property", "regular", "type_I", "dimension")


def classify_type(L, family_cap=4):
    """Run every stage in order; ``I_n`` or ``unclassified`` at the first failure.

    Modularity is tested before the orthocomplement so that lattices without
    one (the pentagon) still report the law they break.
    """
    out = Classification("unclassified", waivers=[CONTINUITY_WAIVER, CARDINALITY_WAIVER])

    def stop(stage, reason, witness=None):
        out.failed_stage, out.reason = stage, reason
        out.witness = None if witness is None else tuple(L.labels[int(i)] for i in witness)
        return out

    out.stages.append("lattice")
    mod = check_modular(L)
    if not mod:
        return stop("modular", "modular law fails", mod.witness)
    out.stages.append("modular")
    if not isinstance(L, OrthoLattice):
        return stop("ortho", "no orthocomplement given")
    out.stages.append("ortho")
    if not is_factorial(L):
        nontrivial = sorted(L.center_set - {L.bottom, L.top})
        return stop("factorial", "center has nontrivial elements", nontrivial[:1])
    out.stages.append("factorial")
    r = check_r_property(L)
    if not r.ok:
        return stop("r_property", r.first_failure().note, r.first_failure().witness)
    out.stages.append("r_property")
    rel = perspectivity(L)
    out.relation = rel
    reg = verify_regular(L, rel, family_cap)
    if not reg.ok:
        f = reg.first_failure()
        return stop("regular", f"perspectivity is not regular: {f.name}", f.witness)
    out.stages.append("regular")
    if not is_type_I(L):
        return stop("type_I", "no nonzero abelian element")
    out.stages.append("type_I")
    try:
        table = dimension_function(L, rel, family_cap)
    except AxiomFails as exc:
        out.failed_stage, out.reason, out.witness = "dimension", str(exc), exc.witness
        return out
    out.stages.append("dimension")
    out.dimension = table
    out.n = table.n
    out.type_tag = table.type_tag
    return out


def is_affine_reference(L, family):
    """Minimal elements joining to top, with no proper subfamily doing so."""
    fam = list(family)
    for a in fam:
        if not L.is_minimal(a):
            w = a if isinstance(L, SubspaceLattice) else L.labels[L.idx(a)]
            raise NotMinimal(f"{w} is not minimal", (w,))
    if L.join_all(fam) != L.top:
        return False
    # joins are monotone, so dropping single members covers every proper subfamily
    return all(L.join_all(fam[:k] + fam[k + 1:]) != L.top for k in range(len(fam)))
