"""Pure-Python kernels.

Same signatures and results as the compiled ``_kernels`` module. Inputs are
numpy arrays; internally rows are turned into Python ints used as bitsets,
which keeps the interpreter overhead per table entry small.

Triples are always scanned in lexicographic index order so the first witness
returned is identical across backends.
"""
import numpy as np

NONE = (-1, -1, -1)


def _row_masks(rel):
    masks = []
    for row in np.asarray(rel, dtype=bool):
        m = 0
        for j in np.flatnonzero(row):
            m |= 1 << int(j)
        masks.append(m)
    return masks


def _masks_to_array(masks, n):
    out = np.zeros((n, n), dtype=np.uint8)
    for i, m in enumerate(masks):
        j = 0
        while m:
            if m & 1:
                out[i, j] = 1
            m >>= 1
            j += 1
    return out


def transitive_closure(rel):
    """Reflexive-transitive closure of a square 0/1 matrix (Warshall)."""
    n = len(rel)
    rows = _row_masks(rel)
    rows = [r | (1 << i) for i, r in enumerate(rows)]
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return _masks_to_array(rows, n)


def bound_tables(leq):
    """Meet and join tables of a finite poset; -1 where no glb/lub exists."""
    leq = np.asarray(leq, dtype=bool)
    n = len(leq)
    down = _row_masks(leq.T)  # down[i]: bitset of k with k <= i
    up = _row_masks(leq)  # up[i]: bitset of k with i <= k
    by_down = {m: i for i, m in enumerate(down)}
    by_up = {m: i for i, m in enumerate(up)}
    meet = [[-1] * n for _ in range(n)]
    join = [[-1] * n for _ in range(n)]
    for i in range(n):
        di, ui = down[i], up[i]
        mi, ji = meet[i], join[i]
        for j in range(i, n):
            # a glb exists iff the common lower bounds form a principal down-set
            g = by_down.get(di & down[j], -1)
            s = by_up.get(ui & up[j], -1)
            mi[j] = meet[j][i] = g
            ji[j] = join[j][i] = s
    return np.array(meet, dtype=np.int32), np.array(join, dtype=np.int32)


def modular_witness(leq, meet, join):
    """First (l, m, u) with l <= u and (l v m) ^ u != l v (m ^ u)."""
    n = len(meet)
    leq = np.asarray(leq, dtype=bool)
    M = meet.tolist()
    J = join.tolist()
    ups = [np.flatnonzero(leq[i]).tolist() for i in range(n)]
    for l in range(n):
        Jl = J[l]
        for m in range(n):
            a = Jl[m]
            Ma = M[a]
            Mm = M[m]
            for u in ups[l]:
                if Ma[u] != Jl[Mm[u]]:
                    return (l, m, u)
    return NONE


def distributive_witness(meet, join):
    """First (a, b, c) with (a v b) ^ c != (a ^ c) v (b ^ c)."""
    n = len(meet)
    M = meet.tolist()
    J = join.tolist()
    for a in range(n):
        Ma = M[a]
        Ja = J[a]
        for b in range(n):
            Mab = M[Ja[b]]
            Mb = M[b]
            for c in range(n):
                if Mab[c] != J[Ma[c]][Mb[c]]:
                    return (a, b, c)
    return NONE


def pentagon_witness(leq, meet, join):
    """First (bot, x, y, z, top) spanning an N5 sublattice, scanning (x, y, z)."""
    n = len(meet)
    L = np.asarray(leq, dtype=bool).tolist()
    M = meet.tolist()
    J = join.tolist()
    for x in range(n):
        for y in range(n):
            if x == y or not L[x][y]:
                continue
            for z in range(n):
                if L[z][x] or L[x][z] or L[z][y] or L[y][z]:
                    continue
                if J[x][z] == J[y][z] and M[x][z] == M[y][z]:
                    return (M[x][z], x, y, z, J[x][z])
    return (-1, -1, -1, -1, -1)


def commutation_matrix(meet, join, perp):
    """comm[i, j] = 1 iff i == (i ^ j) v (i ^ perp(j))."""
    n = len(meet)
    M = meet.tolist()
    J = join.tolist()
    P = np.asarray(perp).tolist()
    out = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        Mi = M[i]
        for j in range(n):
            if J[Mi[j]][Mi[P[j]]] == i:
                out[i, j] = 1
    return out


def commuting_distributive_witness(meet, join, comm):
    """First (a, b, c) where c commutes with a and b but distributivity fails."""
    n = len(meet)
    M = meet.tolist()
    J = join.tolist()
    C = np.asarray(comm, dtype=bool).tolist()
    for a in range(n):
        Ca = C[a]
        for b in range(n):
            Cb = C[b]
            Mab = M[J[a][b]]
            for c in range(n):
                if Ca[c] and Cb[c] and Mab[c] != J[M[a][c]][M[b][c]]:
                    return (a, b, c)
    return NONE
