"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --repeat 3
"""
import argparse
import time

from hilbert_lattice import kernels
from hilbert_lattice.builders import gen_boolean, gen_horizontal_sum, gen_product
from hilbert_lattice.kernels import _pure


def cases():
    yield "boolean6 (64)", gen_boolean(6)
    yield "L2 x L3 (48)", gen_product([gen_horizontal_sum(2), gen_horizontal_sum(3)])
    yield "L30 (62)", gen_horizontal_sum(30)
    yield "boolean7 (128)", gen_boolean(7)


def calls(L):
    O = L.order.view("uint8")
    M, J, P = L.meet_table, L.join_table, L.perp_map
    comm = _pure.commutation_matrix(M, J, P)
    return {
        "transitive_closure": lambda k: k.transitive_closure(O),
        "bound_tables": lambda k: k.bound_tables(O),
        "modular_witness": lambda k: k.modular_witness(O, M, J),
        "pentagon_witness": lambda k: k.pentagon_witness(O, M, J),
        "commutation_matrix": lambda k: k.commutation_matrix(M, J, P),
        "commuting_distributive_witness": lambda k: k.commuting_distributive_witness(M, J, comm),
    }


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    compiled = kernels.compiled()
    if compiled is None:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
        return
    print(f"{'lattice':16} {'kernel':32} {'pure ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, L in cases():
        for kname, fn in calls(L).items():
            tp = best_of(lambda: fn(_pure), args.repeat)
            tc = best_of(lambda: fn(compiled), args.repeat)
            print(f"{name:16} {kname:32} {tp * 1e3:10.2f} {tc * 1e3:12.3f} {tp / max(tc, 1e-9):8.0f}x")


if __name__ == "__main__":
    main()
