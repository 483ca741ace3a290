"""Time the numba kernels against their pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--output kernels.csv]

Each kernel runs once untimed on both backends (numba compiles on first
call), then the best of ``--repeat`` timings is reported together with the
max absolute difference between the two outputs.
"""

import argparse
import csv
import sys
import time

import numpy as np

from precond import _kernels


def cases(rng):
    for n in (16, 64, 128):
        m = rng.standard_normal((n, n))
        a = m + m.T
        yield f"jacobi_eigh n={n}", "jacobi_eigh", (a, 1e-12 * np.linalg.norm(a), 100)
    for n, d, w in ((128, 785, 256), (512, 785, 256), (512, 4096, 256)):
        x = rng.standard_normal((n, d))
        yield f"count_sketch {n}x{d}->{w}", "count_sketch", (x, rng.integers(0, w, d), rng.choice([-1.0, 1.0], d), w)
    for n, k, m in ((128, 10, 1), (512, 10, 8), (4096, 100, 4)):
        cdf = np.cumsum(rng.dirichlet(np.ones(k), n), axis=1)
        yield f"sample_categorical n={n} K={k} m={m}", "sample_categorical", (cdf, rng.random((m, n)))


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def max_diff(a, b):
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a[:2], b[:2]))
    return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="optional CSV path")
    args = p.parse_args(argv)
    if "numba" not in _kernels.IMPLEMENTATIONS:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1
    nb, npy = _kernels.IMPLEMENTATIONS["numba"], _kernels.IMPLEMENTATIONS["numpy"]
    rows = []
    for label, name, kargs in cases(np.random.default_rng(args.seed)):
        nb[name](*kargs)  # compile
        t_nb, out_nb = best_time(nb[name], kargs, args.repeat)
        t_np, out_np = best_time(npy[name], kargs, args.repeat)
        rows.append((label, t_np * 1e3, t_nb * 1e3, t_np / t_nb, max_diff(out_nb, out_np)))
    print(f"{'kernel':<36}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}{'max diff':>11}")
    for label, t_np, t_nb, speed, diff in rows:
        print(f"{label:<36}{t_np:>11.3f}{t_nb:>11.3f}{speed:>9.1f}{diff:>11.1e}")
    if args.output:
        with open(args.output, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["kernel", "numpy_ms", "numba_ms", "speedup", "max_abs_diff"])
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
