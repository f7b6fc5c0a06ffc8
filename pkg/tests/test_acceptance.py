"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (with wall time against its budget);
``conftest.py`` prints them in the terminal summary.
"""
import json
import random
import time
from fractions import Fraction

import pytest

from hilbert_lattice.builders import (
    corpus, decompose_central, gen_boolean, gen_horizontal_sum, gen_pentagon, gen_product, gen_signature,
    is_isomorphic, random_signature,
)
from hilbert_lattice.cli import main
from hilbert_lattice.dimension import classify_type, decompose_minimal_orthogonal, dimension_function
from hilbert_lattice.equivalence import EquivRelation, class_divide, perspectivity, scan_regular_relations
from hilbert_lattice.errors import NotFactorial
from hilbert_lattice.fileformat import serialize
from hilbert_lattice.modularity import check_modular, find_pentagon
from hilbert_lattice.ortho import OrthoLattice, is_factorial
from hilbert_lattice.subspace import q4_snapshot, sample_subspace, s_ortho_decompose

RESULTS = []


def record(number, title, ok, elapsed, budget, detail=""):
    ok = bool(ok) and elapsed < budget
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s / {budget:g}s)"
    if detail:
        line += f"  {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def cli_json(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_criterion_1_pentagon(tmp_path, capsys):
    t = time.perf_counter()
    path = tmp_path / "pentagon.lat"
    path.write_text(serialize(gen_pentagon(), "pentagon"))
    code, out = cli_json(capsys, "check", str(path), "--json")
    report = json.loads(out)
    L = gen_pentagon()
    x, z, y = (L.idx(s) for s in ("x", "z", "y"))
    left, right = L.meet(L.join(x, z), y), L.join(x, L.meet(z, y))
    ok = (code == 1
          and {"law": "modular", "witness": ["x", "z", "y"]} in report["violations"]
          and L.label(left) == "y" and L.label(right) == "x")
    assert record(1, "pentagon violates the modular law at (x, z, y)", ok, time.perf_counter() - t, 1,
                  f"(xvz)^y={L.label(left)}, xv(z^y)={L.label(right)}")


def test_criterion_2_six_element_type_I2():
    t = time.perf_counter()
    L = gen_horizontal_sum(2)
    cls = classify_type(L)
    table = cls.dimension
    middle = {table[x] for x in ("l1", "1-l1", "l2", "1-l2")}
    ok = (is_factorial(L) and cls.type_tag == "I_2"
          and set(table.image()) == {0, Fraction(1, 2), 1} and middle == {Fraction(1, 2)})
    assert record(2, "L_2 is factorial of type I_2 with middle dimensions 1/2", ok, time.perf_counter() - t, 1,
                  f"image={[str(v) for v in table.image()]}")


def test_criterion_3_unique_regular_relation():
    t = time.perf_counter()
    L = gen_horizontal_sum(2)
    scan = scan_regular_relations(L, prune=False)
    ok = scan.scanned == 203 and scan.relations == [perspectivity(L)]
    assert record(3, "exactly one regular relation on L_2, equal to perspectivity", ok, time.perf_counter() - t, 1,
                  f"{len(scan.relations)} of {scan.scanned} partitions")


def test_criterion_4_dimension_axioms():
    t = time.perf_counter()
    ok = True
    for m in (2, 3, 4, 5):
        table = dimension_function(gen_horizontal_sum(m), family_cap=None)
        ok &= table.image() == [0, Fraction(1, 2), 1]
    rejected = 0
    for k in (2, 3, 4):
        B = gen_boolean(k)
        for rel in (perspectivity(B), EquivRelation.equality(B)):
            try:
                dimension_function(B, rel)
            except NotFactorial:
                rejected += 1
    ok &= rejected == 6
    assert record(4, "D1-D5 verified on L_2..L_5, boolean lattices rejected as non-factorial", ok,
                  time.perf_counter() - t, 5, f"{rejected}/6 rejections")


def criterion_5_report(capsys):
    code, out = cli_json(capsys, "subspace", "--dim", "3", "--trials", "200", "--seed", "42", "--suite", "all",
                         "--json")
    return code, out


def test_criterion_5_subspace_suite(capsys):
    t = time.perf_counter()
    code, out = criterion_5_report(capsys)
    laws = json.loads(out)["laws"]
    ok = code == 0 and all(v["checked"] == v["passed"] == 200 for v in laws.values())
    assert record(5, "subspace suite in Q^3, 200 trials, seed 42, all laws", ok, time.perf_counter() - t, 30,
                  f"{len(laws)} laws at 100%")


def criterion_6_report():
    per_lattice = {}
    for name, L in corpus().items():
        if not isinstance(L, OrthoLattice) or not check_modular(L):
            continue
        sizes = [(len(decompose_minimal_orthogonal(L, l)), len(decompose_minimal_orthogonal(L, l, reverse=True)))
                 for l in L.elements]
        per_lattice[name] = all(a == b for a, b in sizes)
    rng = random.Random(4)
    sampled = []
    for _ in range(100):
        U = sample_subspace(rng, 4)
        sampled.append(len(s_ortho_decompose(U)) == len(s_ortho_decompose(U, reverse=True)) == U.dim)
    Q = q4_snapshot()
    rel = EquivRelation(Q, [s.dim for s in Q.subspaces])
    by_dim = {s.dim: rel.class_of[i] for i, s in enumerate(Q.subspaces)}
    n, rest = class_divide(Q, rel, by_dim[3], by_dim[1])
    return {
        "lattices": per_lattice,
        "subspaces_q4_equal": sum(sampled),
        "division": [n, "bottom" if rest == rel.class_of[Q.bottom] else rest],
    }


def test_criterion_6_well_defined_decompositions():
    t = time.perf_counter()
    rep = criterion_6_report()
    ok = all(rep["lattices"].values()) and rep["subspaces_q4_equal"] == 100 and rep["division"] == [3, "bottom"]
    assert record(6, "opposite tie-breaks give equal cardinalities; 3-dim / line in Q^4 = (3, bottom)", ok,
                  time.perf_counter() - t, 10, f"{len(rep['lattices'])} lattices, 100 subspaces")


def criterion_7_report(seed=2024):
    rng = random.Random(seed)
    rows = []
    for _ in range(20):
        e, sums = random_signature(rng, 64)
        factors = [gen_boolean(1)] * e + [gen_horizontal_sum(m) for m in sums]
        rng.shuffle(factors)
        P = gen_product(factors) if len(factors) > 1 else factors[0]
        sig = decompose_central(P)
        iso = is_isomorphic(P, gen_signature(sig.boolean_exponent, sig.sum_sizes)) is not None
        rows.append({"input": [e, list(sums)], "recovered": [sig.boolean_exponent, list(sig.sum_sizes)],
                     "size": P.n, "isomorphic": iso})
    return rows


def test_criterion_7_central_round_trip():
    t = time.perf_counter()
    rows = criterion_7_report()
    ok = len(rows) == 20 and all(r["input"] == r["recovered"] and r["isomorphic"] and r["size"] <= 64 for r in rows)
    assert record(7, "central decomposition recovers 20 random signatures", ok, time.perf_counter() - t, 30,
                  f"sizes {min(r['size'] for r in rows)}-{max(r['size'] for r in rows)}")


def test_criterion_8_dedekind_cross_check():
    t = time.perf_counter()
    checked = 0
    ok = True
    for name, L in corpus().items():
        if L.n > 64:
            continue
        ok &= bool(check_modular(L)) == (find_pentagon(L) is None)
        checked += 1
    assert record(8, "modular law fails exactly when a pentagon is found", ok, time.perf_counter() - t, 10,
                  f"{checked} lattices")


def test_criterion_9_determinism(capsys):
    t = time.perf_counter()
    a5 = criterion_5_report(capsys)[1]
    b5 = criterion_5_report(capsys)[1]
    a6 = json.dumps(criterion_6_report(), sort_keys=True)
    b6 = json.dumps(criterion_6_report(), sort_keys=True)
    a7 = json.dumps(criterion_7_report(), sort_keys=True)
    b7 = json.dumps(criterion_7_report(), sort_keys=True)
    ok = a5 == b5 and a6 == b6 and a7 == b7
    assert record(9, "repeated runs of criteria 5-7 give byte-identical JSON", ok, time.perf_counter() - t, 90)


@pytest.fixture(scope="session", autouse=True)
def _expose_results(request):
    request.config._acceptance_results = RESULTS
    yield
