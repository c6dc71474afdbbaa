"""Compare the compiled and pure-Python branch-and-bound kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both kernels run on the same inputs; their results must agree exactly.
"""
import argparse
import random
import time
from fractions import Fraction

from hyperpart.core import BalanceSpec, CostMetric
from hyperpart.gadgets import coloring_reduction, recursive_counterexample, spes_reduction
from hyperpart.kernels import _pykernels
from hyperpart.solvers import _csr, _spec_arrays
from hyperpart.verify import random_hypergraph

try:
    from hyperpart.kernels import _ckernels
except ImportError:
    _ckernels = None


def cases():
    inst = spes_reduction((4, [(0, 1), (1, 2), (2, 3), (0, 3)]), 2)
    yield "spes C4 p=2 (seeded)", inst.h, inst.spec, CostMetric.CUTNET, 2, inst.certificate["planted_cost"]
    inst = recursive_counterexample(24)
    yield "recursive n=24", inst.h, inst.spec, CostMetric.CONN, 4, None
    inst = coloring_reduction((3, [(0, 1), (1, 2), (0, 2)]))
    yield "coloring triangle (seeded)", inst.h, inst.spec, CostMetric.CUTNET, 2, 0
    h = random_hypergraph(random.Random(1), 13, 14, 4)
    yield "random n=13 m=14 k=3", h, BalanceSpec.single(Fraction(1, 4)), CostMetric.CONN, 3, None
    inst = spes_reduction((3, [(0, 1), (1, 2), (0, 2)]), 2)
    yield "spes triangle p=2 (unseeded)", inst.h, inst.spec, CostMetric.CUTNET, 2, None


def run(mod, h, spec, metric, k, ub):
    node_cons, caps = _spec_arrays(h, spec, k)
    eptr, pins, nptr, nedges = _csr(h)
    worst = sum(h.weights) * (1 if metric is CostMetric.CUTNET else k - 1)
    bound = worst + 1 if ub is None else ub + 1
    return mod.bnb_search(h.n, k, eptr, pins, list(h.weights), nptr, nedges,
                          0 if metric is CostMetric.CUTNET else 1, node_cons, caps,
                          list(range(h.n)), bound, True, 2 * 10**9)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python kernel is available")
    print(f"{'case':32} {'n':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, h, spec, metric, k, ub in cases():
        timing = {}
        results = {}
        for label, mod in (("python", _pykernels), ("cython", _ckernels)):
            if mod is None:
                continue
            best = None
            for _ in range(args.repeat):
                t = time.perf_counter()
                res = run(mod, h, spec, metric, k, ub)
                dt = time.perf_counter() - t
                best = dt if best is None else min(best, dt)
            timing[label] = best
            results[label] = res[:3]
        if len(results) == 2:
            assert results["python"] == results["cython"], f"{name}: kernels disagree"
        py = timing["python"]
        cy = timing.get("cython")
        speed = f"{py / cy:8.1f}" if cy else "       -"
        cys = f"{cy:10.4f}" if cy else "         -"
        print(f"{name:32} {h.n:5d} {py:10.4f} {cys} {speed}")


if __name__ == "__main__":
    main()
