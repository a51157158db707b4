"""Compare the JIT kernels against the pure-numpy fallback.

Runs each kernel family on identical inputs through both implementations
and prints a table of per-call times plus the speedup ratio.  Both
backends are imported directly, so this script is independent of the
UNITGROUPS_PURE_NUMPY flag.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

import numpy as np

from unitgroups import _kern_numba, _kern_numpy, gf2
from unitgroups._engines import DenseEngine
from unitgroups.gf import field_make


def _timeit(fn, args, repeat):
    fn(*args)  # warmup (JIT compile / cache fill)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _packed(rng, degree):
    return gf2.pack([rng.randrange(2) for _ in range(degree)] + [1])


def _dense(rng, q, length):
    a = np.array([rng.randrange(q) for _ in range(length)], dtype=np.int64)
    a[-1] = rng.randrange(1, q)
    return a


def build_cases(rng):
    cases = []

    a = _packed(rng, 10000)
    b = _packed(rng, 10000)
    cases.append(("g2_mul deg 10^4", "g2_mul", (a, b)))

    big = _packed(rng, 20000)
    f = _packed(rng, 512)
    cases.append(("g2_rem deg 2*10^4 mod 512", "g2_rem",
                  (big, gf2.deg(big), f, gf2.deg(f))))

    u = _packed(rng, 4096)
    v = _packed(rng, 4000)
    cases.append(("g2_gcd deg 4096", "g2_gcd",
                  (u, gf2.deg(u), v, gf2.deg(v))))

    eng = DenseEngine(field_make(3, 2))
    da = _dense(rng, 9, 600)
    db = _dense(rng, 9, 600)
    cases.append(("fq_mul GF(9) deg 600", "fq_mul",
                  (da, db, eng._mulf, eng._addf, 9)))
    dc = _dense(rng, 9, 1200)
    cases.append(("fq_divmod GF(9) 1200/600", "fq_divmod",
                  (dc, db, eng._mulf, eng._subf, eng._inv, 9)))
    cases.append(("fq_gcd GF(9) deg 600", "fq_gcd",
                  (da, db, eng._mulf, eng._subf, eng._inv, 9)))
    return cases


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=7,
                    help="timing repetitions per case (best is kept)")
    args = ap.parse_args()

    rng = random.Random(0)
    rows = []
    for label, name, case_args in build_cases(rng):
        t_jit = _timeit(getattr(_kern_numba, name), case_args, args.repeat)
        t_np = _timeit(getattr(_kern_numpy, name), case_args, args.repeat)
        rows.append((label, t_jit, t_np, t_np / t_jit))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'numba':>10}  {'numpy':>10}  {'ratio':>7}")
    print("-" * (width + 33))
    for label, t_jit, t_np, ratio in rows:
        print(f"{label:<{width}}  {t_jit * 1e3:>8.3f}ms  {t_np * 1e3:>8.3f}ms"
              f"  {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
