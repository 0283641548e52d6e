"""Compare the compiled kernels against the pure-Python fallbacks.

Run:  python3 benchmarks/bench_kernels.py

Both code paths are exercised through the same dispatchers the library
uses, so the numbers reflect what CYCLECOVER_DISABLE_NUMBA=1 would cost.
"""

import time

import numpy as np

from cyclecover import _kernels
from cyclecover.cycling import construct_family
from cyclecover.indep import randomized_family


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_increasing():
    print("scan_increasing (uncovered-subset scan over all k-subsets)")
    print(f"{'case':>16} {'compiled':>12} {'python':>12} {'speedup':>9}")
    for n, k in [(32, 3), (64, 3), (48, 5), (64, 6)]:
        fam = construct_family(n, k)
        bits = np.stack([t.bits for t in fam.rounds])
        # warm-up triggers JIT compilation outside the timed region
        _kernels.scan_increasing(n, k, bits)
        fast, a = timeit(lambda: _kernels.scan_increasing(n, k, bits))
        slow, b = timeit(
            lambda: _kernels.scan_increasing(n, k, bits, force_python=True),
            repeat=1,
        )
        assert a == b
        print(
            f"  n={n:3d} k={k}   {fast * 1e3:9.2f} ms {slow * 1e3:9.2f} ms "
            f"{slow / fast:8.1f}x"
        )


def bench_kindep():
    print("scan_kindep (2^k intersection patterns over all k-tuples)")
    print(f"{'case':>16} {'compiled':>12} {'python':>12} {'speedup':>9}")
    for m, k, t in [(20, 3, 80), (36, 3, 100), (15, 4, 160)]:
        fam = randomized_family(m, k, t, seed=1)
        masks = fam.masks()
        _kernels.scan_kindep(masks, t, k)
        fast, a = timeit(lambda: _kernels.scan_kindep(masks, t, k))
        slow, b = timeit(
            lambda: _kernels.scan_kindep(masks, t, k, force_python=True),
            repeat=1,
        )
        assert a == b
        print(
            f"  m={m:3d} k={k}   {fast * 1e3:9.2f} ms {slow * 1e3:9.2f} ms "
            f"{slow / fast:8.1f}x"
        )


if __name__ == "__main__":
    print(f"compiled kernels available: {_kernels.HAVE_NUMBA}")
    bench_increasing()
    bench_kindep()
