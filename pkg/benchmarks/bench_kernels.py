"""Benchmark the compiled kernels against the pure-Python fallbacks.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py
"""

import random
import time

from jtalg import _kernels_py, _oracle_py
from jtalg.terms import random_term

try:
    from jtalg import _kernels
except ImportError:
    _kernels = None


def clock(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def scalar_workload(mod):
    acc = 0
    for n in range(200_000):
        p, q = mod.jw_unpair(n)
        acc ^= mod.jw_mul(p, q)
    return acc


def oracle_workload(mod, terms):
    return [mod.closure_min_mults(t, 16) for t in terms]


def main():
    rng = random.Random(2024)
    terms = [_oracle_py.term_to_tuple(random_term(rng, 8)) for _ in range(40)]

    rows = []
    benches = [
        ("jw_unpair/jw_mul x200k", scalar_workload,
         (_kernels_py,), (_kernels,) if _kernels else None),
        ("value_scan(10**6)", lambda m: m.value_scan(10**6),
         (_kernels_py,), (_kernels,) if _kernels else None),
        ("pair_scan(2000)", lambda m: m.pair_scan(2000),
         (_kernels_py,), (_kernels,) if _kernels else None),
        ("closure oracle, 40 terms", oracle_workload,
         (_oracle_py, terms), (_kernels, terms) if _kernels else None),
    ]
    for name, fn, pure_args, fast_args in benches:
        pure = clock(fn, *pure_args, repeat=1)
        if fast_args is None:
            rows.append((name, pure, None))
        else:
            fast = clock(fn, *fast_args)
            rows.append((name, pure, fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark'.ljust(width)}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, pure, fast in rows:
        if fast is None:
            print(f"{name.ljust(width)}  {pure:>9.3f}s  {'n/a':>10}")
        else:
            print(f"{name.ljust(width)}  {pure:>9.3f}s  {fast:>9.3f}s  {pure / fast:>7.1f}x")
    if _kernels is None:
        print("\ncompiled kernel not built; only the pure lane was timed")


if __name__ == "__main__":
    main()
