"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_backends.py [--m 8 --t 8 --count 2000 --seed 0]

Times the raw key-equation kernel, syndrome evaluation, and full decodes on
each available backend and prints one CSV row per (workload, backend).
"""

import argparse
import time

from rskes import kernels
from rskes.campaign import bench, bench_workload
from rskes.code import CodeParams, compute_syndromes
from rskes.decoder import Solver


def timed(fn, reps):
    start = time.perf_counter()
    for _ in range(reps):
        fn()
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=8)
    ap.add_argument("--n", type=int, default=None)
    ap.add_argument("--t", type=int, default=8)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    code = CodeParams.make(args.m, args.n, args.t)
    f = code.field
    words = bench_workload(code, args.seed, args.count)
    syndromes = [compute_syndromes(code, w) for w in words]
    print(f"# {code}; backends: {', '.join(sorted(kernels.BACKENDS))}")
    print("workload,backend,calls,seconds,calls_per_sec")
    base = {}
    for name in sorted(kernels.BACKENDS):
        with kernels.using(name):
            loads = {
                "kes_run(I*)": lambda: [kernels.kes_run(f, kernels.MODE_FUSED, code.t, S) for S in syndromes],
                "eval_many": lambda: [kernels.eval_many(f, w, code.syndrome_points) for w in words],
            }
            for label, fn in loads.items():
                secs = timed(fn, 1)
                base.setdefault(label, {})[name] = secs
                print(f"{label},{name},{len(words)},{secs:.4f},{len(words) / secs:.1f}")
    for row in bench(code, args.seed, args.count, (Solver.ALG1_STAR, Solver.CLASSIC_EO), sorted(kernels.BACKENDS)):
        print(f"decode({row.solver}),{row.backend},{row.decodes},{row.seconds:.4f},{row.rate:.1f}")
        base.setdefault(f"decode({row.solver})", {})[row.backend] = row.seconds
    if "cython" in kernels.BACKENDS:
        print("# speedup python/cython: " + ", ".join(
            f"{k} {v['python'] / v['cython']:.1f}x" for k, v in base.items()))


if __name__ == "__main__":
    main()
