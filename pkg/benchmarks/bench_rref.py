"""Compare the compiled and pure-Python row reduction kernels.

    python benchmarks/bench_rref.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

from fanoaut import _kernels, _rref_py, catalog


def random_rows(nrows, ncols, density, seed):
    rng = random.Random(seed)
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) if rng.random() < density else Fraction(0)
             for _ in range(ncols)] for _ in range(nrows)]


def timed(fn, rows, ncols, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(rows, ncols)
        best = min(best, time.perf_counter() - t0)
    return best


def stabilizer_workload():
    """Wall time of the whole catalog under each kernel, patched in place."""
    out = {}
    for label, fn in (("python", _rref_py.rref_rows), (_kernels.BACKEND, _kernels.rref_rows)):
        saved = _kernels.rref_rows
        _kernels.rref_rows = fn
        from fanoaut import polyring
        polyring._BASIS_CACHE.clear()
        t0 = time.perf_counter()
        results = catalog.verify_all()
        out[label] = time.perf_counter() - t0
        _kernels.rref_rows = saved
        assert all(r.ok for r in results)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.BACKEND == "python":
        print("compiled kernel not built; only the pure-Python kernel is available")
    print(f"{'shape':>12} {'density':>8} {'python s':>10} {_kernels.BACKEND + ' s':>10} {'speedup':>8}")
    for (n, m, dens) in [(20, 20, 1.0), (40, 40, 0.3), (60, 80, 0.1), (120, 80, 0.05), (30, 30, 1.0)]:
        rows = random_rows(n, m, dens, seed=n * m)
        assert _rref_py.rref_rows(rows, m) == _kernels.rref_rows(rows, m)
        tp = timed(_rref_py.rref_rows, rows, m, args.repeat)
        tc = timed(_kernels.rref_rows, rows, m, args.repeat)
        print(f"{f'{n}x{m}':>12} {dens:>8.2f} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.2f}x")
    wl = stabilizer_workload()
    print("full catalog: " + ", ".join(f"{k} {v:.2f}s" for k, v in wl.items()))


if __name__ == "__main__":
    main()
