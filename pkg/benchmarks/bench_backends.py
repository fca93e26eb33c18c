"""Compare the compiled and pure-Python kernel backends on every engine.

    python3 benchmarks/bench_backends.py [--scale 12] [--ef 8] [--reps 3] [--workers 1]
"""
import argparse
import time

from adaptcc import backend
from adaptcc.engines import ALGORITHMS, run_algorithm
from adaptcc.graph import rmat
from adaptcc.oracle import oracle_cc, partitions_equal


def best_ms(fn, reps):
    times = []
    for _ in range(reps):
        t = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t) * 1e3)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=12)
    ap.add_argument("--ef", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--workers", default="1")
    args = ap.parse_args(argv)
    workers = args.workers if args.workers == "max" else int(args.workers)

    g = rmat(args.scale, args.ef, seed=args.seed)
    oracle = oracle_cc(g)
    names = backend.available()
    print(f"rmat scale={args.scale} ef={args.ef}: n={g.n} m={g.m}, workers={workers}, "
          f"best of {args.reps}")
    print(f"{'algo':12s}" + "".join(f"{name + ' ms':>14s}" for name in names) + f"{'ratio':>10s}")
    for algo in ALGORITHMS:
        row = {}
        for name in names:
            kernels = backend.get(name)
            ms, (labels, _) = best_ms(
                lambda: run_algorithm(algo, g, "auto", workers, kernels=kernels), args.reps)
            assert partitions_equal(labels, oracle), (algo, name)
            row[name] = ms
        ratio = row["python"] / row["cython"] if len(row) == 2 else float("nan")
        print(f"{algo:12s}" + "".join(f"{row[n]:14.2f}" for n in names) + f"{ratio:10.1f}")


if __name__ == "__main__":
    main()
