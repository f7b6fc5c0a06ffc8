"""Subspaces of Q^n in exact rational arithmetic.

A subspace is stored by the reduced row-echelon form of any spanning set, so
equality of subspaces is equality of fields. The orthocomplement is taken
with respect to the dot product, which is anisotropic over Q (a sum of
rational squares vanishes only at zero), hence ``U ^ perp(U) = 0`` always.
Over a finite field this fails in three or more variables, which is why the
model works over Q.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import AmbientMismatch, DimensionMismatch, WidthMismatch

MIN_AMBIENT = 2
MAX_AMBIENT = 6


def _rref(rows, n):
    """Nonzero rows of the reduced row-echelon form, plus pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def null_space(rows, n):
    """Basis of ``{x : r . x = 0 for every row r}``."""
    red, pivots = _rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(v)
    return out


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple  # RREF rows of Fractions

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return f"Subspace(Q^{self.ambient_dim}, {self.token()})"

    def token(self):
        """Whitespace-free name: ``0``, ``1`` or ``<r1;r2;...>``."""
        if self.dim == 0:
            return "0"
        if self.dim == self.ambient_dim:
            return "1"
        return "<" + ";".join(",".join(_fmt(x) for x in row) for row in self.basis) + ">"

    def contains(self, v):
        return len(_rref(list(self.basis) + [tuple(v)], self.ambient_dim)[0]) == self.dim


def s_canonicalize(rows, n=None):
    rows = [tuple(r) for r in rows]
    if n is None:
        if not rows:
            raise WidthMismatch("ambient dimension needed for an empty spanning set")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise WidthMismatch(f"row of width {len(r)} in Q^{n}", (r,))
    return Subspace(n, tuple(_rref(rows, n)[0]))


def zero(n):
    return Subspace(n, ())


def full(n):
    return s_canonicalize([[int(i == j) for j in range(n)] for i in range(n)], n)


def line(*v):
    return s_canonicalize([v])


def _same_ambient(U, V):
    if U.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(f"Q^{U.ambient_dim} vs Q^{V.ambient_dim}", (U, V))


def s_join(U, V):
    _same_ambient(U, V)
    return s_canonicalize(list(U.basis) + list(V.basis), U.ambient_dim)


def s_leq(U, V):
    _same_ambient(U, V)
    return s_join(U, V) == V


def s_meet(U, V):
    """Intersection by the kernel of ``[U; -V]``: ``sum a_i u_i = sum b_j v_j``."""
    _same_ambient(U, V)
    n = U.ambient_dim
    p, q = U.dim, V.dim
    if p == 0 or q == 0:
        return zero(n)
    # columns are the spanning vectors; rows are coordinates
    cols = list(U.basis) + [tuple(-x for x in v) for v in V.basis]
    M = [[cols[k][i] for k in range(p + q)] for i in range(n)]
    vecs = []
    for coeff in null_space(M, p + q):
        vecs.append([sum((coeff[k] * U.basis[k][i] for k in range(p)), Fraction(0)) for i in range(n)])
    return s_canonicalize(vecs, n)


def s_perp(U):
    n = U.ambient_dim
    if U.dim == 0:
        return full(n)
    return s_canonicalize(null_space(U.basis, n), n)


def s_relative_complement(U, V):
    """``U - V = perp(V) ^ U``."""
    return s_meet(s_perp(V), U)


def s_ortho_decompose(U, reverse=False):
    """Mutually orthogonal lines joining to ``U``, by Gram-Schmidt without normalization."""
    rows = list(U.basis)
    if reverse:
        rows.reverse()
    ortho = []
    for v in rows:
        w = list(v)
        for u in ortho:
            c = _dot(v, u) / _dot(u, u)  # positive denominator by anisotropy
            w = [a - c * b for a, b in zip(w, u)]
        ortho.append(w)
    return [s_canonicalize([w], U.ambient_dim) for w in ortho]


def candidate_vectors(n, max_norm=None):
    """Nonzero integer vectors ordered by max-norm, then lexicographically."""
    k = 1
    while max_norm is None or k <= max_norm:
        for v in product(range(-k, k + 1), repeat=n):
            if max(abs(x) for x in v) == k:
                yield v
        k += 1


def s_common_complement(U, V):
    """A common complement of two equidimensional subspaces, built greedily."""
    _same_ambient(U, V)
    if U.dim != V.dim:
        raise DimensionMismatch(f"dimensions {U.dim} and {V.dim} differ", (U, V))
    n = U.ambient_dim
    W = zero(n)
    while W.dim < n - U.dim:
        UW, VW = s_join(U, W), s_join(V, W)
        for v in candidate_vectors(n):
            if not UW.contains(v) and not VW.contains(v):
                W = s_join(W, s_canonicalize([v], n))
                break
    top, bot = full(n), zero(n)
    for X in (U, V):
        if s_join(W, X) != top or s_meet(W, X) != bot:
            raise AssertionError("common complement construction failed")
    return W


def s_dimension(U):
    return Fraction(U.dim, U.ambient_dim)


def sample_subspace(rng, n, weights=None):
    """Random subspace of Q^n; dimension drawn by ``weights`` (length n+1),
    rows with integer entries in [-3, 3] redrawn until the rank matches."""
    weights = weights or [1] * (n + 1)
    d = rng.choices(range(n + 1), weights=weights)[0]
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(d)]
        U = s_canonicalize(rows, n)
        if U.dim == d:
            return U


def sample_line_in(rng, U):
    """A random line inside a nonzero subspace."""
    while True:
        coeff = [rng.randint(-3, 3) for _ in range(U.dim)]
        v = [sum((c * row[i] for c, row in zip(coeff, U.basis)), Fraction(0)) for i in range(U.ambient_dim)]
        if any(v):
            return s_canonicalize([v], U.ambient_dim)


class SubspaceLattice:
    """The (infinite) lattice of subspaces of Q^n, with elements made on demand."""

    def __init__(self, n):
        if not MIN_AMBIENT <= n <= MAX_AMBIENT:
            raise ValueError(f"ambient dimension must be in [{MIN_AMBIENT}, {MAX_AMBIENT}], got {n}")
        self.ambient_dim = n
        self.bottom = zero(n)
        self.top = full(n)

    def __repr__(self):
        return f"SubspaceLattice(Q^{self.ambient_dim})"

    def leq(self, a, b):
        return s_leq(a, b)

    def meet(self, a, b):
        return s_meet(a, b)

    def join(self, a, b):
        return s_join(a, b)

    def perp(self, a):
        return s_perp(a)

    def join_all(self, S):
        out = self.bottom
        for s in S:
            out = s_join(out, s)
        return out

    def is_minimal(self, a):
        return a.dim == 1

    def standard_lines(self):
        n = self.ambient_dim
        return [s_canonicalize([[int(i == j) for j in range(n)]], n) for i in range(n)]


def subspace_snapshot(generators, n, cap=256):
    """Finite ortholattice: the closure of ``generators`` under meet, join and perp."""
    from .lattice import Lattice
    from .ortho import attach_orthocomplement
    from .errors import TooLarge

    elems = {zero(n), full(n)}
    for g in generators:
        elems.add(g if isinstance(g, Subspace) else s_canonicalize(g, n))
    frontier = list(elems)
    while frontier:
        new = []
        current = list(elems)
        for a in frontier:
            cands = [s_perp(a)]
            for b in current:
                cands += [s_meet(a, b), s_join(a, b)]
            for c in cands:
                if c not in elems:
                    elems.add(c)
                    new.append(c)
                    if len(elems) > cap:
                        raise TooLarge(f"closure exceeds {cap} subspaces")
        frontier = new
    ordered = sorted(elems, key=lambda s: (s.dim, s.basis))
    pos = {s: i for i, s in enumerate(ordered)}
    order = np.array([[s_leq(a, b) for b in ordered] for a in ordered])
    meet = np.array([[pos[s_meet(a, b)] for b in ordered] for a in ordered], dtype=np.int32)
    join = np.array([[pos[s_join(a, b)] for b in ordered] for a in ordered], dtype=np.int32)
    L = Lattice([s.token() for s in ordered], order, meet, join)
    OL = attach_orthocomplement(L, [(i, pos[s_perp(s)]) for i, s in enumerate(ordered)])
    OL.subspaces = tuple(ordered)
    return OL


def q2_snapshot():
    """Lines (1,0), (0,1), (1,1), (1,-1) of Q^2 with 0 and Q^2: six elements, height two."""
    return subspace_snapshot([[(1, 0)], [(1, 1)]], 2)


def q4_snapshot():
    """Closure of the coordinate lines of Q^4 and the line through (1,1,0,0)."""
    gens = [[tuple(int(i == j) for j in range(4))] for i in range(4)] + [[(1, 1, 0, 0)]]
    return subspace_snapshot(gens, 4)
