"""Time the numba kernels against their numpy fallbacks.

Run as `python3 benchmarks/bench_backends.py`.  With QBOREL_DISABLE_NUMBA=1
(or numba missing) only the fallback column is reported.
"""

import argparse
import time

import numpy as np

from qborel import _kernels, engine
from qborel.poset import Poset


def best_of(fn, reps):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def closure_rows(n, deg):
    # every degree-deg monomial on n variables, via the closure on a chain
    chain = Poset(n, [(i, i + 1) for i in range(1, n)])
    top = np.zeros(n, dtype=np.int64)
    top[-1] = deg
    return np.ascontiguousarray(engine.generate_principal(chain, top).gens)


def build_workloads(rng):
    rows = np.unique(rng.integers(0, 4, size=(1200, 8)), axis=0)
    rows = np.ascontiguousarray(rows[np.argsort(rows.sum(1), kind="stable")])
    degs = rows.sum(1)

    keep = _kernels.minimalize_keep(rows, degs)
    gens = np.ascontiguousarray(rows[keep])
    queries = np.ascontiguousarray(rng.integers(0, 7, size=(4000, 8)))

    colon_fs = np.ascontiguousarray(rng.integers(0, 3, size=(400, 8)))
    vbuf = np.zeros(8, dtype=np.bool_)

    mat = np.ascontiguousarray(rng.integers(0, 3, size=(60, 10)))

    adj_rows = closure_rows(8, 3)
    nvert = adj_rows.shape[1]

    def colon_batch(kernel):
        for f in colon_fs:
            kernel(gens, f, vbuf)

    pairs = [
        ("minimalize_keep",
         lambda k=_kernels: k._minimalize_keep_nb(rows, degs),
         lambda: _kernels._minimalize_keep_np(rows, degs)),
        ("divides_any",
         lambda k=_kernels: k._divides_any_nb(gens, queries),
         lambda: _kernels._divides_any_np(gens, queries)),
        ("colon_class x400",
         lambda k=_kernels: colon_batch(k._colon_class_nb),
         lambda: colon_batch(_kernels._colon_class_np)),
        ("integer_rank 60x10",
         lambda k=_kernels: k._bareiss_rank_nb(mat.copy(), _kernels.BAREISS_LIMIT),
         lambda: _kernels._rank_exact_np(mat)),
        ("relation_adjacency",
         lambda k=_kernels: k._relation_adjacency_nb(
             adj_rows, np.zeros((nvert, nvert), np.bool_)),
         lambda: _kernels._relation_adjacency_np(
             adj_rows, np.zeros((nvert, nvert), np.bool_))),
    ]
    return pairs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(20240817)
    pairs = build_workloads(rng)

    print(f"backend={_kernels.BACKEND}")
    if _kernels.NUMBA_ENABLED:
        _kernels.warm_up()
        print(f"{'kernel':24} {'numba':>10} {'numpy':>10} {'speedup':>8}")
        for name, nb_fn, np_fn in pairs:
            nb_fn()  # compile before timing
            t_nb = best_of(nb_fn, args.reps)
            t_np = best_of(np_fn, args.reps)
            print(f"{name:24} {t_nb * 1e3:9.3f}ms {t_np * 1e3:9.3f}ms "
                  f"{t_np / t_nb:7.1f}x")
    else:
        print(f"{'kernel':24} {'numpy':>10}")
        for name, _, np_fn in pairs:
            t_np = best_of(np_fn, args.reps)
            print(f"{name:24} {t_np * 1e3:9.3f}ms")


if __name__ == "__main__":
    main()
