"""Compare the numba and numpy pair-scan kernels.

Usage: python benchmarks/bench_kernels.py [--sizes 10 100 1000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from fuzzyrank import kernels, make_scaling


def bench(fn, *args, repeat):
    fn(*args)  # warm-up, includes JIT compilation
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 100, 1000, 3000])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'n':>6}{'numba [ms]':>14}{'numpy [ms]':>14}{'speedup':>10}")
    for n in args.sizes:
        x = (rng.permutation(n) + 1).astype(np.int64)
        y = (rng.permutation(n) + 1).astype(np.int64)
        dist = make_scaling(rng.uniform(0, 0.2, n - 1)).distance_matrix()
        weights = rng.uniform(0, 1, (n, n))
        cases = {
            "crisp_counts": ((kernels.crisp_counts_nb, kernels.crisp_counts_np), (x, y)),
            "fuzzy_sums": ((kernels.fuzzy_sums_nb, kernels.fuzzy_sums_np), (x, y, dist, dist, kernels.TNORM_LUK)),
            "weighted_counts": ((kernels.weighted_counts_nb, kernels.weighted_counts_np), (x, y, weights)),
        }
        for name, ((nb, npy), fargs) in cases.items():
            t_nb = bench(nb, *fargs, repeat=args.repeat) * 1e3
            t_np = bench(npy, *fargs, repeat=args.repeat) * 1e3
            print(f"{name:<16}{n:>6}{t_nb:>14.3f}{t_np:>14.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
