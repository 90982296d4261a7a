"""Compare the numba and numpy finite-field kernels.

Times ``x^p mod f`` (the inner step of distinct-degree factorization) over
F_p and F_{p^2} for random moduli of several degrees, then an end-to-end
Frobenius sweep with each backend swapped in.

    python3 benchmarks/bench_kernels.py [--degrees 16 64 256] [--repeat 5]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from lemniscate import kernels
from lemniscate.lemnatomic import frobenius_pattern, admissible_primes
from lemniscate.gaussint import odd_gaussints_up_to_norm

P = 2**31 - 1  # 3 mod 4, so F_p[t]/(t^2+1) is a field


def _timed(fn, repeat):
    fn()  # warm-up, includes JIT compilation for numba
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench_powmod(degrees, repeat, rng):
    names = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]
    print(f"{'field':6} {'deg':>5} " + " ".join(f"{n:>12}" for n in names) + "   speedup")
    for field in ("F_p", "F_p2"):
        for d in degrees:
            if field == "F_p":
                f = rng.integers(0, P, d + 1, dtype=np.int64)
                f[-1] = 1
                x = np.array([0, 1], dtype=np.int64)
            else:
                f = rng.integers(0, P, (d + 1, 2), dtype=np.int64)
                f[-1] = (1, 0)
                x = np.array([[0, 0], [1, 0]], dtype=np.int64)
            times = []
            for name in names:
                k = kernels.backend(name)
                pm = k.fp_powmod if field == "F_p" else k.fp2_powmod
                times.append(_timed(lambda: pm(x, P, f, P), repeat))
            speed = f"{times[1] / times[0]:8.1f}x" if len(times) == 2 else ""
            print(f"{field:6} {d:5d} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f"  {speed}")


def bench_frobenius(max_norm, repeat):
    cases = []
    for beta in odd_gaussints_up_to_norm(max_norm):
        if beta.is_unit():
            continue
        primes = admissible_primes(beta)
        cases += [(beta, next(primes)) for _ in range(3)]

    def sweep():
        for beta, pi in cases:
            frobenius_pattern(beta, pi)

    saved = kernels.ACTIVE
    names = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]
    try:
        for name in names:
            kernels.ACTIVE = kernels.backend(name)
            t = _timed(sweep, repeat)
            print(f"frobenius sweep N<={max_norm} ({len(cases)} patterns) {name:>6}: {t:.3f}s")
    finally:
        kernels.ACTIVE = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[16, 64, 256])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-norm", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bench_powmod(args.degrees, args.repeat, np.random.default_rng(args.seed))
    bench_frobenius(args.max_norm, max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
