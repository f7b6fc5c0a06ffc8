"""Modular and distributive laws, and pentagon (N5) detection.

All scans are exhaustive over index triples and return the first failing
triple in lexicographic order, so witnesses are reproducible.
"""
from dataclasses import dataclass

from . import kernels


@dataclass(frozen=True)
class LawResult:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def check_modular(L):
    """``l <= u`` implies ``(l v m) ^ u == l v (m ^ u)``; witness ``(l, m, u)``."""
    w = kernels.modular_witness(L.order.view("uint8"), L.meet_table, L.join_table)
    return LawResult(True) if w[0] < 0 else LawResult(False, tuple(int(x) for x in w))


def check_distributive(L):
    """``(a v b) ^ c == (a ^ c) v (b ^ c)``; witness ``(a, b, c)``."""
    w = kernels.distributive_witness(L.meet_table, L.join_table)
    return LawResult(True) if w[0] < 0 else LawResult(False, tuple(int(x) for x in w))


def find_pentagon(L):
    """``(bot, x, y, z, top)`` with x < y, z incomparable to both,
    ``x v z == y v z == top`` and ``x ^ z == y ^ z == bot``; None if absent.
    """
    w = kernels.pentagon_witness(L.order.view("uint8"), L.meet_table, L.join_table)
    return None if w[0] < 0 else tuple(int(x) for x in w)
