"""Seeded property checks on the subspace lattice of Q^n.

Every law gets its own ``random.Random`` seeded with ``f"{seed}:{law}"``, so
laws can be run separately (or in parallel) and still reproduce the same
samples. Minimal elements are lines; laws quantified over minimals are
checked through their linear-algebra reformulation plus sampled lines.
"""
import random
from dataclasses import dataclass, field

from .errors import DimensionMismatch
from .subspace import (
    full,
    s_canonicalize,
    s_common_complement,
    s_dimension,
    s_join,
    s_leq,
    s_meet,
    s_ortho_decompose,
    s_perp,
    s_relative_complement,
    sample_line_in,
    sample_subspace,
    zero,
)

SUITES = ("all", "lattice", "modular", "commutation", "regular", "dimension", "lemmas")
WAIVERS = (
    "cardinality of the continuum: waived (the rational model is countable)",
    "scalars are rational, not complex: the dot product stays anisotropic over Q",
)


def _commutes(U, V):
    return s_join(s_meet(U, V), s_meet(U, s_perp(V))) == U


def _inside(rng, U):
    """Random subspace of ``U`` (possibly zero or ``U`` itself)."""
    return s_meet(sample_subspace(rng, U.ambient_dim), U)


def _with_dim(rng, n, d):
    w = [0] * (n + 1)
    w[d] = 1
    return sample_subspace(rng, n, w)


def _first_rows(U, d):
    return s_canonicalize(U.basis[:d], U.ambient_dim)


def _perspective(U, V):
    """True with a verified common complement, False on a dimension mismatch."""
    try:
        s_common_complement(U, V)
    except DimensionMismatch:
        return False
    return True


# Each law takes (rng, n) and returns (ok, nonvacuous, witness subspaces).

def law_lattice_identities(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    J, M = s_join(U, V), s_meet(U, V)
    ok = (J == s_join(V, U) and M == s_meet(V, U)
          and s_meet(U, J) == U and s_join(U, M) == U
          and s_join(U, U) == U and s_meet(U, U) == U
          and s_leq(U, V) == (M == U) == (J == V))
    return ok, True, (U, V)


def law_ortholattice_axioms(rng, n):
    U = sample_subspace(rng, n)
    V = s_join(U, sample_subspace(rng, n)) if rng.random() < 0.5 else sample_subspace(rng, n)
    P = s_perp(U)
    ok = (s_perp(P) == U and s_join(U, P) == full(n) and s_meet(U, P) == zero(n)
          and s_perp(s_join(U, V)) == s_meet(P, s_perp(V))
          and s_perp(s_meet(U, V)) == s_join(P, s_perp(V)))
    if s_leq(U, V):
        ok = ok and s_leq(s_perp(V), P)
    return ok, True, (U, V)


def law_canonical_form(rng, n):
    U = sample_subspace(rng, n)
    rows = [[c * x for x in r] for c, r in zip(range(2, 2 + U.dim), U.basis)]
    rng.shuffle(rows)
    ok = s_canonicalize(U.basis, n) == U and s_canonicalize(rows, n) == U
    return ok, True, (U,)


def law_modular(rng, n):
    U, V, W = (sample_subspace(rng, n) for _ in range(3))
    X = s_join(U, W)  # forces U <= X
    ok = s_meet(s_join(U, V), X) == s_join(U, s_meet(V, X))
    return ok, True, (U, V, X)


def law_orthogonal_commute(rng, n):
    U = sample_subspace(rng, n)
    V = _inside(rng, s_perp(U))
    return _commutes(U, V) and _commutes(V, U), True, (U, V)


def law_commutation_symmetric(rng, n):
    U = sample_subspace(rng, n)
    if rng.random() < 0.5:
        V = s_join(_inside(rng, U), _inside(rng, s_perp(U)))
    else:
        V = sample_subspace(rng, n)
    a, b = _commutes(U, V), _commutes(V, U)
    return a == b, a, (U, V)


def law_commuting_distributive(rng, n):
    W = sample_subspace(rng, n)
    P = s_perp(W)
    U = s_join(_inside(rng, W), _inside(rng, P))
    V = s_join(_inside(rng, W), _inside(rng, P))
    ok = s_meet(s_join(U, V), W) == s_join(s_meet(U, W), s_meet(V, W))
    return ok, True, (U, V, W)


def law_orthogonal_cancellation(rng, n):
    U = sample_subspace(rng, n)
    P = s_perp(U)
    A = _inside(rng, P)
    B = s_meet(s_join(U, A), P) if rng.random() < 0.5 else _inside(rng, P)
    if s_join(U, A) != s_join(U, B):
        return True, False, (U, A, B)
    return A == B, True, (U, A, B)


def law_commuting_inverse(rng, n):
    U = sample_subspace(rng, n)
    P = s_perp(U)
    cands = [P, s_common_complement(U, U)] + [_with_dim(rng, n, n - U.dim) for _ in range(3)]
    for W in cands:
        inverse = s_join(U, W) == full(n) and s_meet(U, W) == zero(n)
        if inverse and _commutes(U, W) and W != P:
            return False, True, (U, W)
    return True, True, (U,)


def law_perspective_iff_equal_dim(rng, n):
    U = sample_subspace(rng, n)
    V = _with_dim(rng, n, U.dim) if rng.random() < 0.5 else sample_subspace(rng, n)
    return _perspective(U, V) == (U.dim == V.dim), U.dim == V.dim, (U, V)


def law_parallelogram(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    left = s_relative_complement(s_join(U, V), U)
    right = s_relative_complement(V, s_meet(U, V))
    return _perspective(left, right), True, (U, V)


def law_class_division(rng, n):
    """Peel off pieces of the divisor's dimension; count and remainder follow division."""
    U = sample_subspace(rng, n, [0] + [1] * n)
    d = rng.randint(1, n)
    r, count = U, 0
    while r.dim >= d:
        piece = _first_rows(r, d)
        r = s_relative_complement(r, piece)
        count += 1
    ok = count == U.dim // d and r.dim == U.dim % d
    return ok, True, (U, _first_rows(full(n), d))


def law_decomposition_rank(rng, n):
    U = sample_subspace(rng, n)
    lines = s_ortho_decompose(U)
    ok = len(lines) == U.dim and all(L.dim == 1 for L in lines)
    ok = ok and all(s_leq(a, s_perp(b)) for i, a in enumerate(lines) for b in lines[i + 1:])
    return ok, True, (U,)


def law_tie_break(rng, n):
    U = sample_subspace(rng, n)
    return len(s_ortho_decompose(U)) == len(s_ortho_decompose(U, reverse=True)), True, (U,)


def _D(U):
    return s_dimension(U)


def law_D1(rng, n):
    return _D(zero(n)) == 0 and _D(full(n)) == 1, True, ()


def law_D2(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    return _D(s_join(U, V)) + _D(s_meet(U, V)) == _D(U) + _D(V), True, (U, V)


def law_D3(rng, n):
    U = sample_subspace(rng, n)
    V = _with_dim(rng, n, U.dim) if rng.random() < 0.5 else sample_subspace(rng, n)
    return (_D(U) == _D(V)) == _perspective(U, V), _D(U) == _D(V), (U, V)


def law_D4(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    if _D(U) <= _D(V):
        # a witness below V perspective to U
        return _perspective(U, _first_rows(V, U.dim)), True, (U, V)
    # every subspace of V is smaller than U, so none can be perspective to it
    return not _perspective(U, V), False, (U, V)


def law_D5(rng, n):
    U = sample_subspace(rng, n)
    lines = s_ortho_decompose(sample_subspace(rng, n))
    fam = lines[: rng.randint(0, len(lines))]
    J = zero(n)
    for L in fam:
        J = s_join(J, L)
    ok = sum((_D(L) for L in fam), _D(zero(n))) == _D(J)
    ok = ok and sum((_D(L) for L in s_ortho_decompose(U)), _D(zero(n))) == _D(U)
    return ok, bool(fam), (U, J)


def law_dimension_image(rng, n):
    U = sample_subspace(rng, n)
    return _D(U) * n == len(s_ortho_decompose(U)), True, (U,)


def law_minimals_join(rng, n):
    U = sample_subspace(rng, n)
    J = zero(n)
    for L in s_ortho_decompose(U):
        J = s_join(J, L)
    ok = J == U
    if U.dim:
        ok = ok and s_leq(sample_line_in(rng, U), U)
    return ok, U.dim > 0, (U,)


def law_order_by_minimals(rng, n):
    U = sample_subspace(rng, n)
    V = s_join(U, sample_subspace(rng, n)) if rng.random() < 0.5 else sample_subspace(rng, n)
    lines_in_V = all(s_leq(L, V) for L in s_ortho_decompose(U))
    if U.dim:
        sampled = s_leq(sample_line_in(rng, U), V)
        if s_leq(U, V) and not sampled:
            return False, True, (U, V)
    return s_leq(U, V) == lines_in_V, True, (U, V)


def law_orthogonal_set_of_join(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    P = s_perp(s_join(U, V))
    ok = s_leq(P, s_meet(s_perp(U), s_perp(V)))
    if P.dim:
        L = sample_line_in(rng, P)
        ok = ok and s_leq(L, s_perp(U)) and s_leq(L, s_perp(V))
    return ok, P.dim > 0, (U, V)


def law_no_orthogonal_minimal_below_join(rng, n):
    U, V = sample_subspace(rng, n), sample_subspace(rng, n)
    both = s_meet(s_perp(U), s_perp(V))
    ok = s_meet(s_join(U, V), both) == zero(n)
    if both.dim:
        ok = ok and not s_leq(sample_line_in(rng, both), s_join(U, V))
    return ok, both.dim > 0, (U, V)


def law_minimals_perspective(rng, n):
    L, M = _with_dim(rng, n, 1), _with_dim(rng, n, 1)
    return _perspective(L, M), True, (L, M)


def law_minimals_of_relative_complement(rng, n):
    U = sample_subspace(rng, n)
    V = _inside(rng, U)
    R = s_relative_complement(U, V)
    L = _with_dim(rng, n, 1) if rng.random() < 0.5 or not R.dim else sample_line_in(rng, R)
    ok = s_leq(L, R) == (s_leq(L, U) and s_leq(L, s_perp(V)))
    return ok, s_leq(L, R), (U, V, L)


LAWS = {
    "lattice identities": ("lattice", law_lattice_identities),
    "ortholattice axioms": ("lattice", law_ortholattice_axioms),
    "canonical form": ("lattice", law_canonical_form),
    "modular law": ("modular", law_modular),
    "orthogonal elements commute": ("commutation", law_orthogonal_commute),
    "commutation symmetric": ("commutation", law_commutation_symmetric),
    "distributive over commuting element": ("commutation", law_commuting_distributive),
    "orthogonal cancellation": ("commutation", law_orthogonal_cancellation),
    "commuting inverse is orthocomplement": ("commutation", law_commuting_inverse),
    "perspective iff equal dimension": ("regular", law_perspective_iff_equal_dim),
    "parallelogram": ("regular", law_parallelogram),
    "class division": ("regular", law_class_division),
    "decomposition size is rank": ("dimension", law_decomposition_rank),
    "decomposition tie-break invariance": ("dimension", law_tie_break),
    "D1 normalization": ("dimension", law_D1),
    "D2 valuation": ("dimension", law_D2),
    "D3 equal dimension iff perspective": ("dimension", law_D3),
    "D4 dimension order iff domination": ("dimension", law_D4),
    "D5 orthogonal additivity": ("dimension", law_D5),
    "dimension image": ("dimension", law_dimension_image),
    "minimals join to the element": ("lemmas", law_minimals_join),
    "order determined by minimals": ("lemmas", law_order_by_minimals),
    "orthogonal set of a join": ("lemmas", law_orthogonal_set_of_join),
    "no orthogonal minimal below a join": ("lemmas", law_no_orthogonal_minimal_below_join),
    "minimal elements are perspective": ("lemmas", law_minimals_perspective),
    "minimals of a relative complement": ("lemmas", law_minimals_of_relative_complement),
}


@dataclass
class LawTally:
    checked: int = 0
    passed: int = 0
    nonvacuous: int = 0
    counterexample: list | None = None

    def to_dict(self):
        return {"checked": self.checked, "passed": self.passed,
                "nonvacuous": self.nonvacuous, "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    ambient_dim: int
    trials: int
    seed: int
    suite: str
    laws: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(t.passed == t.checked for t in self.laws.values())

    def to_dict(self):
        return {
            "ambient_dim": self.ambient_dim,
            "trials": self.trials,
            "seed": self.seed,
            "suite": self.suite,
            "ok": self.ok,
            "laws": {k: v.to_dict() for k, v in self.laws.items()},
            "waivers": list(WAIVERS),
        }


def run_property_suite(n, trials, seed, suite="all"):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 2 <= n <= 6:
        raise ValueError("ambient dimension must be in [2, 6]")
    report = SuiteReport(n, trials, seed, suite)
    for name, (group, fn) in LAWS.items():
        if suite != "all" and group != suite:
            continue
        rng = random.Random(f"{seed}:{name}")
        tally = LawTally()
        for _ in range(trials):
            ok, nonvacuous, witness = fn(rng, n)
            tally.checked += 1
            tally.passed += bool(ok)
            tally.nonvacuous += bool(nonvacuous)
            if not ok and tally.counterexample is None:
                tally.counterexample = [W.token() for W in witness]
        report.laws[name] = tally
    return report
