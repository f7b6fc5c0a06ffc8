# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirror of ``_pure`` (same signatures, same witnesses)."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cnp.import_array()


def transitive_closure(rel):
    cdef cnp.uint8_t[:, ::1] r = np.array(rel, dtype=np.uint8, order="C")
    cdef Py_ssize_t n = r.shape[0], i, j, k
    for i in range(n):
        r[i, i] = 1
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                for j in range(n):
                    if r[k, j]:
                        r[i, j] = 1
    return np.asarray(r)


def _pack(rows):
    """Rows of a 0/1 matrix as little-endian uint64 words."""
    n = rows.shape[0]
    w = (n + 63) // 64
    padded = np.zeros((n, w * 64), dtype=np.uint8)
    padded[:, :n] = rows
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).copy()


cdef void _bounds(const uint64_t[:, ::1] S, const cnp.int32_t[::1] size, cnp.int32_t[:, ::1] out,
                  uint64_t[::1] common, Py_ssize_t n, Py_ssize_t w) noexcept nogil:
    # common = S[i] & S[j] is itself a down-set (resp. up-set); the bound is the
    # member k of it whose own set has the same size, if any
    cdef Py_ssize_t i, j, q, k
    cdef int count, found
    cdef uint64_t word
    for i in range(n):
        for j in range(i, n):
            count = 0
            for q in range(w):
                common[q] = S[i, q] & S[j, q]
                count += popcount64(common[q])
            found = -1
            for q in range(w):
                word = common[q]
                while word:
                    k = q * 64 + ctz64(word)
                    if size[k] == count:
                        found = <int>k
                        break
                    word &= word - 1
                if found >= 0:
                    break
            out[i, j] = found
            out[j, i] = found


def bound_tables(leq):
    L = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef Py_ssize_t n = L.shape[0]
    cdef Py_ssize_t w = (n + 63) // 64
    down_a = _pack(np.ascontiguousarray(L.T))
    up_a = _pack(L)
    cdef const uint64_t[:, ::1] down = down_a
    cdef const uint64_t[:, ::1] up = up_a
    cdef const cnp.int32_t[::1] cdown = L.sum(axis=0, dtype=np.int32)
    cdef const cnp.int32_t[::1] cup = L.sum(axis=1, dtype=np.int32)
    meet_a = np.full((n, n), -1, dtype=np.int32)
    join_a = np.full((n, n), -1, dtype=np.int32)
    cdef uint64_t[::1] common = np.zeros(max(w, 1), dtype=np.uint64)
    if n:
        _bounds(down, cdown, meet_a, common, n, w)
        _bounds(up, cup, join_a, common, n, w)
    return meet_a, join_a


def modular_witness(leq, meet, join):
    cdef const cnp.uint8_t[:, ::1] L = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const cnp.int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], l, m, u
    cdef int a
    for l in range(n):
        for m in range(n):
            a = J[l, m]
            for u in range(n):
                if L[l, u] and M[a, u] != J[l, M[m, u]]:
                    return (l, m, u)
    return (-1, -1, -1)


def distributive_witness(meet, join):
    cdef const cnp.int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = J[a, b]
            for c in range(n):
                if M[ab, c] != J[M[a, c], M[b, c]]:
                    return (a, b, c)
    return (-1, -1, -1)


def pentagon_witness(leq, meet, join):
    cdef const cnp.uint8_t[:, ::1] L = np.ascontiguousarray(leq, dtype=np.uint8)
    cdef const cnp.int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], x, y, z
    for x in range(n):
        for y in range(n):
            if x == y or not L[x, y]:
                continue
            for z in range(n):
                if L[z, x] or L[x, z] or L[z, y] or L[y, z]:
                    continue
                if J[x, z] == J[y, z] and M[x, z] == M[y, z]:
                    return (M[x, z], x, y, z, J[x, z])
    return (-1, -1, -1, -1, -1)


def commutation_matrix(meet, join, perp):
    cdef const cnp.int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const cnp.int32_t[::1] P = np.ascontiguousarray(perp, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], i, j
    out_a = np.zeros((n, n), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] out = out_a
    for i in range(n):
        for j in range(n):
            if J[M[i, j], M[i, P[j]]] == i:
                out[i, j] = 1
    return out_a


def commuting_distributive_witness(meet, join, comm):
    cdef const cnp.int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const cnp.int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const cnp.uint8_t[:, ::1] C = np.ascontiguousarray(comm, dtype=np.uint8)
    cdef Py_ssize_t n = M.shape[0], a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = J[a, b]
            for c in range(n):
                if C[a, c] and C[b, c] and M[ab, c] != J[M[a, c], M[b, c]]:
                    return (a, b, c)
    return (-1, -1, -1)
