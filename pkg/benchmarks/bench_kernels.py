"""Compare the compiled and numpy sweep kernels on synthetic Poisson streams.

    python3 benchmarks/bench_kernels.py [--tags 10000000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from oamlink import kernels


def streams(n_total: int, seconds: float, seed: int):
    rng = np.random.default_rng(seed)
    duration = int(seconds * 1e12)
    a = np.sort(rng.integers(0, duration, n_total // 2))
    b = np.sort(rng.integers(0, duration, n_total - n_total // 2))
    return a, b


def best_of(fn, repeat: int) -> tuple[float, object]:
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--tags", type=int, default=10_000_000)
    parser.add_argument("--seconds", type=float, default=10.0)
    parser.add_argument("--bins", type=int, default=10_000)
    parser.add_argument("--bin-ps", type=int, default=100)
    parser.add_argument("--window-ps", type=int, default=2500)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    a, b = streams(args.tags, args.seconds, 0)
    lo = -(args.bins * args.bin_ps) // 2
    print(f"{args.tags} tags over {args.seconds} s; histogram {args.bins} x {args.bin_ps} ps")
    if "cython" not in kernels.BACKENDS:
        print("compiled backend not built; timing the numpy fallback only")
    print(f"{'backend':<8} {'histogram s':>12} {'coincidences s':>15} {'count':>8}")
    results = {}
    for name, impl in sorted(kernels.BACKENDS.items()):
        th, hist = best_of(lambda: impl.correlation_histogram(a, b, lo, args.bin_ps, args.bins), args.repeat)
        tc, count = best_of(lambda: impl.count_coincidences(a, b, 0, args.window_ps), args.repeat)
        results[name] = (np.asarray(hist), count)
        print(f"{name:<8} {th:>12.3f} {tc:>15.3f} {count:>8}")
    hists = [r[0] for r in results.values()]
    counts = {r[1] for r in results.values()}
    agree = all(np.array_equal(h, hists[0]) for h in hists) and len(counts) == 1
    print("backends agree" if agree else "BACKENDS DISAGREE")


if __name__ == "__main__":
    main()
