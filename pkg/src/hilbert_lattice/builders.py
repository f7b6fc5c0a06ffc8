"""Example lattices, products, isomorphism search and central decomposition."""
from dataclasses import dataclass
from itertools import product as iproduct
from string import ascii_lowercase

import numpy as np

from .errors import NotDecomposable, NotModular, OrthoError, TooLarge
from .lattice import Lattice, Poset, build_from_covers
from .modularity import check_modular
from .ortho import OrthoLattice, attach_orthocomplement, center, reduced_lattice, validate_ortho

MAX_BOOLEAN_ATOMS = 12
MAX_HORIZONTAL_SUM = 64
MAX_PRODUCT_SIZE = 4096
MAX_ISO_SIZE = 64
# above this size product modularity is inferred from the factors
FULL_MODULAR_CHECK_SIZE = 256


def gen_boolean(k):
    """Subsets of a k-element set; labels list the member letters, "0"/"1" for the bounds."""
    if not 1 <= k <= MAX_BOOLEAN_ATOMS:
        raise TooLarge(f"boolean lattices are built for 1 <= k <= {MAX_BOOLEAN_ATOMS}, got {k}")
    n = 1 << k
    full = n - 1
    idx = np.arange(n, dtype=np.int32)
    labels = []
    for s in range(n):
        if s == 0:
            labels.append("0")
        elif s == full:
            labels.append("1")
        else:
            labels.append("".join(ascii_lowercase[b] for b in range(k) if s >> b & 1))
    meet = idx[:, None] & idx[None, :]
    join = idx[:, None] | idx[None, :]
    L = Lattice(labels, meet == idx[:, None], meet, join)
    return attach_orthocomplement(L, list(enumerate((full ^ idx).tolist())))


def gen_horizontal_sum(m):
    """Height-2 ortholattice with middle elements l1, 1-l1, ..., lm, 1-lm."""
    if not 1 <= m <= MAX_HORIZONTAL_SUM:
        raise TooLarge(f"horizontal sums are built for 1 <= m <= {MAX_HORIZONTAL_SUM}, got {m}")
    n = 2 * m + 2
    top = n - 1
    labels = ["0"]
    for i in range(1, m + 1):
        labels += [f"l{i}", f"1-l{i}"]
    labels.append("1")
    order = np.zeros((n, n), dtype=bool)
    order[0, :] = True
    order[:, top] = True
    np.fill_diagonal(order, True)
    meet = np.zeros((n, n), dtype=np.int32)
    join = np.full((n, n), top, dtype=np.int32)
    for i in range(n):
        meet[i, i] = join[i, i] = i
        meet[i, top] = meet[top, i] = i
        join[i, 0] = join[0, i] = i
    perp = [top] + [j + 1 if j % 2 else j - 1 for j in range(1, n - 1)] + [0]
    return attach_orthocomplement(Lattice(labels, order, meet, join), list(enumerate(perp)))


def gen_pentagon():
    """N5: 0 < x < y < 1 and 0 < z < 1."""
    return build_from_covers(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1")],
    )


def gen_hexagon():
    """The benzene ring: chains 0 < a < b < 1 and 0 < 1-b < 1-a < 1."""
    L = build_from_covers(
        ["0", "a", "b", "1-b", "1-a", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "1-b"), ("1-b", "1-a"), ("1-a", "1")],
    )
    return attach_orthocomplement(L, [("a", "1-a"), ("b", "1-b")])


TWO_GENERATOR_ELEMENTS = [
    "0", "x^y", "x^(1-y)", "y^(1-x)", "1-(xvy)",
    "x", "y", "1-y", "1-x",
    "xvy", "1-(y^(1-x))", "1-(x^(1-y))", "1-(x^y)", "1",
]
TWO_GENERATOR_COVERS = [
    ("0", "x^y"), ("0", "x^(1-y)"), ("0", "y^(1-x)"), ("0", "1-(xvy)"),
    ("x^y", "x"), ("x^y", "y"),
    ("x^(1-y)", "x"), ("x^(1-y)", "1-y"),
    ("y^(1-x)", "y"), ("y^(1-x)", "1-x"),
    ("1-(xvy)", "1-y"), ("1-(xvy)", "1-x"),
    ("x", "xvy"), ("x", "1-(y^(1-x))"),
    ("y", "xvy"), ("y", "1-(x^(1-y))"),
    ("1-y", "1-(y^(1-x))"), ("1-y", "1-(x^y)"),
    ("1-x", "1-(x^y)"), ("1-x", "1-(x^(1-y))"),
    ("xvy", "1"), ("1-(y^(1-x))", "1"), ("1-(x^(1-y))", "1"), ("1-(x^y)", "1"),
]
TWO_GENERATOR_PERP = [
    ("x", "1-x"), ("y", "1-y"), ("x^y", "1-(x^y)"), ("x^(1-y)", "1-(x^(1-y))"),
    ("y^(1-x)", "1-(y^(1-x))"), ("1-(xvy)", "xvy"), ("0", "1"),
]


def two_generator_diagram_poset():
    """The 14-element two-generator diagram exactly as drawn (not a lattice)."""
    from .lattice import poset_from_covers

    return poset_from_covers(TWO_GENERATOR_ELEMENTS, TWO_GENERATOR_COVERS)


def dedekind_macneille(P, perp_pairs=None):
    """Completion by cuts of a finite poset, optionally extending an involution.

    Cuts equal to a principal down-set keep that element's label; new cuts are
    labelled ``v(a,b,...)`` after their maximal members.
    """
    n = P.n
    downs = [frozenset(np.flatnonzero(P.order[:, i]).tolist()) for i in range(n)]
    cuts = set(downs) | {frozenset(range(n))}
    frontier = list(cuts)
    while frontier:
        new = []
        for a in frontier:
            for b in list(cuts):
                c = a & b
                if c not in cuts:
                    cuts.add(c)
                    new.append(c)
        frontier = new
    principal = {d: i for i, d in enumerate(downs)}
    ordered = sorted(cuts, key=lambda c: (len(c), principal.get(c, n), sorted(c)))
    labels = []
    for c in ordered:
        if c in principal:
            labels.append(P.labels[principal[c]])
        else:
            tops = [i for i in sorted(c) if not any(P.order[i, j] and i != j for j in c)]
            labels.append("v(" + ",".join(P.labels[i] for i in tops) + ")")
    order = np.array([[a <= b for b in ordered] for a in ordered])
    L = Lattice.from_order(labels, order)
    if perp_pairs is None:
        return L
    pmap = {}
    for a, b in perp_pairs:
        a, b = P.idx(a), P.idx(b)
        pmap[a], pmap[b] = b, a
    pos = {c: k for k, c in enumerate(ordered)}
    perp = []
    for c in ordered:
        images = [pmap[i] for i in c]
        # lower bounds of the images
        lower = frozenset(k for k in range(n) if all(P.order[k, j] for j in images))
        perp.append(pos[lower])
    return attach_orthocomplement(L, list(enumerate(perp)))


def gen_two_generator_ortho():
    """Completion by cuts of the two-generator diagram, with its orthocomplement."""
    return dedekind_macneille(two_generator_diagram_poset(), TWO_GENERATOR_PERP)


def gen_chain(k=2):
    labels = ["0"] + [f"c{i}" for i in range(1, k - 1)] + ["1"] if k > 1 else ["0"]
    return build_from_covers(labels, list(zip(labels, labels[1:])))


def gen_product(factors):
    """Componentwise product; the orthocomplement is componentwise too."""
    factors = list(factors)
    sizes = [F.n for F in factors]
    N = int(np.prod(sizes, dtype=np.int64)) if factors else 1
    if N > MAX_PRODUCT_SIZE:
        raise TooLarge(f"product has {N} elements, cap is {MAX_PRODUCT_SIZE}")
    idx = np.arange(N)
    digits, strides = [], []
    stride = N
    for s in sizes:
        stride //= s
        strides.append(stride)
        digits.append((idx // stride) % s)
    order = np.ones((N, N), dtype=bool)
    meet = np.zeros((N, N), dtype=np.int32)
    join = np.zeros((N, N), dtype=np.int32)
    for F, d, st in zip(factors, digits, strides):
        ix = np.ix_(d, d)
        order &= F.order[ix]
        meet += F.meet_table[ix] * st
        join += F.join_table[ix] * st
    labels = ["(" + ",".join(F.labels[d[i]] for F, d in zip(factors, digits)) + ")" for i in range(N)]
    L = Lattice(labels, order, meet, join)
    L.factor_sizes = tuple(sizes)
    if not all(isinstance(F, OrthoLattice) for F in factors):
        return L
    perp = np.zeros(N, dtype=np.int32)
    for F, d, st in zip(factors, digits, strides):
        perp += F.perp_map[d] * st
    d = validate_ortho(L, perp)
    if not d.ok:
        raise OrthoError(f"product orthocomplement fails {d.first_failure().name}")
    P = OrthoLattice(L, perp)
    P.factor_sizes = tuple(sizes)
    if N <= FULL_MODULAR_CHECK_SIZE:
        P.modular = bool(check_modular(P))
    else:
        P.modular = all(bool(check_modular(F)) for F in factors)
    return P


def _signature(L):
    ranks = L.ranks()
    below = L.order.sum(axis=0)
    above = L.order.sum(axis=1)
    cov = np.zeros((L.n, L.n), dtype=bool)
    for a, b in L.covers():
        cov[a, b] = True
    return [(ranks[i], int(below[i]), int(above[i]), int(cov[:, i].sum()), int(cov[i].sum())) for i in L.elements]


def is_isomorphic(A, B):
    """An order- (and perp-) preserving bijection ``{a: b}``, or None.

    Backtracking over elements of A in rank order; candidates must agree on a
    local invariant signature and on order relations with everything already
    placed. Orthocomplements are compared when both sides have them.
    """
    if A.n > MAX_ISO_SIZE or B.n > MAX_ISO_SIZE:
        raise TooLarge(f"isomorphism search is capped at {MAX_ISO_SIZE} elements")
    if A.n != B.n:
        return None
    sa, sb = _signature(A), _signature(B)
    if sorted(sa) != sorted(sb):
        return None
    ortho = isinstance(A, OrthoLattice) and isinstance(B, OrthoLattice)
    n = A.n
    seq = sorted(A.elements, key=lambda i: (sa[i], i))
    f = [-1] * n
    used = [False] * n
    placed_a, placed_b = [], []

    def consistent(a, b):
        if not placed_a:
            return True
        pa, pb = placed_a, placed_b
        return (np.array_equal(A.order[a, pa], B.order[b, pb])
                and np.array_equal(A.order[pa, a], B.order[pb, b]))

    def assign(a, b):
        f[a] = b
        used[b] = True
        placed_a.append(a)
        placed_b.append(b)

    def unassign(a, b):
        f[a] = -1
        used[b] = False
        placed_a.pop()
        placed_b.pop()

    def rec(k):
        while k < n and f[seq[k]] >= 0:
            k += 1
        if k == n:
            return True
        a = seq[k]
        for b in range(n):
            if used[b] or sb[b] != sa[a] or not consistent(a, b):
                continue
            assign(a, b)
            pairs = [(a, b)]
            ok = True
            if ortho:
                pa, pbb = int(A.perp_map[a]), int(B.perp_map[b])
                if pa != a or pbb != b:
                    if pa == a or pbb == b:
                        ok = False
                    elif f[pa] >= 0:
                        ok = f[pa] == pbb
                    elif used[pbb] or sa[pa] != sb[pbb] or not consistent(pa, pbb):
                        ok = False
                    else:
                        assign(pa, pbb)
                        pairs.append((pa, pbb))
            if ok and rec(k + 1):
                return True
            for x, y in reversed(pairs):
                unassign(x, y)
        return False

    if not rec(0):
        return None
    return {a: f[a] for a in A.elements}


@dataclass(frozen=True)
class CentralDecomposition:
    boolean_exponent: int
    sum_sizes: tuple

    def to_dict(self):
        return {"boolean_exponent": self.boolean_exponent, "sum_sizes": list(self.sum_sizes)}


def gen_signature(boolean_exponent, sum_sizes):
    """Standard product of 2-chains and horizontal sums."""
    factors = [gen_boolean(1)] * boolean_exponent + [gen_horizontal_sum(m) for m in sum_sizes]
    if not factors:
        return OrthoLattice(gen_chain(1), [0])
    if len(factors) == 1:
        return factors[0]
    return gen_product(factors)


def _classify_factor(F):
    if F.n == 2:
        return "chain", 1
    mid = [i for i in F.elements if i not in (F.bottom, F.top)]
    if F.n >= 4 and F.n % 2 == 0:
        sub = np.ix_(mid, mid)
        height_two = not (F.order[sub] & ~np.eye(len(mid), dtype=bool)).any()
        if height_two:
            return "sum", len(mid) // 2
    return None, None


def decompose_central(OL):
    """Split along the atoms of the center into 2-chains and horizontal sums.

    Raises NotDecomposable when a factor is neither, or when the canonical
    map onto the product of factors fails to be an isomorphism.
    """
    if not check_modular(OL):
        raise NotModular("central decomposition needs a modular ortholattice")
    C = sorted(center(OL))
    nonzero = [c for c in C if c != OL.bottom]
    atoms = [c for c in nonzero if not any(d != c and OL.order[d, c] for d in nonzero)]
    exponent, sums = 0, []
    factors = []
    for c in atoms:
        F = reduced_lattice(OL, c)
        kind, m = _classify_factor(F)
        if kind is None:
            raise NotDecomposable(
                f"factor below {OL.labels[c]} ({F.n} elements) is neither a 2-chain nor a horizontal sum",
                (OL.labels[c],),
            )
        factors.append(F)
        if kind == "chain":
            exponent += 1
        else:
            sums.append(m)
    if factors:
        _check_canonical_map(OL, atoms, factors)
    elif OL.n != 1:
        raise NotDecomposable("center has no atoms", ())
    result = CentralDecomposition(exponent, tuple(sorted(sums)))
    if OL.n <= MAX_ISO_SIZE:
        if is_isomorphic(OL, gen_signature(exponent, result.sum_sizes)) is None:
            raise NotDecomposable(f"reconstruction from {result} is not isomorphic", ())
    return result


def _check_canonical_map(OL, atoms, factors):
    """x -> (x ^ c1, ..., x ^ ck) must be an ortho-isomorphism onto the product."""
    sizes = [F.n for F in factors]
    if int(np.prod(sizes)) != OL.n:
        raise NotDecomposable("factor sizes do not multiply to the lattice size", ())
    local = []
    for F in factors:
        loc = np.full(OL.n, -1, dtype=np.int64)
        loc[list(F.parent_index)] = np.arange(F.n)
        local.append(loc)
    code = np.zeros(OL.n, dtype=np.int64)
    stride = OL.n
    for c, F, loc in zip(atoms, factors, local):
        stride //= F.n
        code += loc[OL.meet_table[:, c]] * stride
    if len(set(code.tolist())) != OL.n:
        raise NotDecomposable("canonical map is not injective", ())
    target = gen_product(factors) if len(factors) > 1 else factors[0]
    if not np.array_equal(OL.order, target.order[np.ix_(code, code)]):
        raise NotDecomposable("canonical map does not preserve order", ())
    if not np.array_equal(code[OL.perp_map], target.perp_map[code]):
        raise NotDecomposable("canonical map does not preserve orthocomplements", ())


def random_signature(rng, max_size=64):
    """A random (exponent, sums) whose product has at most ``max_size`` elements."""
    while True:
        exponent = rng.randrange(0, 5)
        sums = []
        size = 2 ** exponent
        for _ in range(rng.randrange(0, 3)):
            m = rng.randrange(2, 8)
            if size * (2 * m + 2) <= max_size:
                sums.append(m)
                size *= 2 * m + 2
        if (exponent or sums) and size <= max_size:
            return exponent, tuple(sorted(sums))


def corpus():
    """Named example lattices used across checks and tests."""
    from .subspace import q2_snapshot, q4_snapshot

    out = {
        "chain2": OrthoLattice(gen_chain(2), [1, 0]),
        "pentagon": gen_pentagon(),
        "hexagon": gen_hexagon(),
        "twogen": gen_two_generator_ortho(),
        "q2_snapshot": q2_snapshot(),
        "q4_snapshot": q4_snapshot(),
    }
    for k in (1, 2, 3, 4, 5, 6):
        out[f"boolean{k}"] = gen_boolean(k)
    for m in (1, 2, 3, 4, 5, 8, 16):
        out[f"L{m}"] = gen_horizontal_sum(m)
    out["L2xchain"] = gen_product([gen_horizontal_sum(2), gen_boolean(1)])
    out["L2xL3"] = gen_product([gen_horizontal_sum(2), gen_horizontal_sum(3)])
    out["L2xboolean2"] = gen_product([gen_horizontal_sum(2), gen_boolean(2)])
    return out


__all__ = [
    "gen_boolean", "gen_horizontal_sum", "gen_pentagon", "gen_hexagon", "gen_two_generator_ortho",
    "two_generator_diagram_poset", "dedekind_macneille", "gen_chain", "gen_product", "is_isomorphic",
    "decompose_central", "CentralDecomposition", "gen_signature", "random_signature", "corpus",
    "Poset", "iproduct",
]
