"""Compare the compiled and numpy linear-ordering kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from euclidkemeny._backend import available_backends

DP_SIZES = (8, 12, 16, 18, 20)
BRUTE_SIZES = (6, 8, 9, 10)


def random_cost(rng, n, V=15):
    upper = np.triu(rng.integers(0, V + 1, (n, n)), 1)
    cost = upper + np.tril(V - upper.T, -1)
    np.fill_diagonal(cost, 0)
    return cost.astype(np.int64)


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    backends = available_backends()
    rng = np.random.default_rng(args.seed)
    names = sorted(backends)
    print(f"{'kernel':<12}{'n':>4}" + "".join(f"{name:>12}" for name in names) + f"{'speedup':>10}")
    for kernel, sizes in (("dp_order", DP_SIZES), ("brute_order", BRUTE_SIZES)):
        for n in sizes:
            cost = random_cost(rng, n)
            row = {}
            results = []
            for name in names:
                row[name], res = best_time(lambda: getattr(backends[name], kernel)(cost), args.repeat)
                results.append(res[1])
            assert len(set(results)) == 1, f"backends disagree on {kernel} n={n}"
            speedup = row["python"] / row["cython"] if "cython" in row else float("nan")
            print(f"{kernel:<12}{n:>4}" + "".join(f"{row[name]:>11.4f}s" for name in names) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
