"""Time the pure-Python mask kernels against the compiled ones.

Each kernel is run on a representative workload: the set-level kernels on a
full middle level C(n, k), the pair scanner on every antichain of a small
cube.  Results from the two backends are compared for equality before any
timing, so a reported speedup is always a speedup on identical answers.

Usage:
    python3 benchmarks/bench_backends.py [--n 12] [--k 6] [--pairs-n 4]
"""

import argparse
import timeit

from kktools import enumerate_antichains, level_masks
from kktools import _pure

try:
    from kktools import _speedups
except ImportError:
    _speedups = None


def _workloads(n: int, k: int, pairs_n: int):
    level = level_masks(n, k)
    families = list(enumerate_antichains(pairs_n))
    return [
        (f"shadow_masks on C({n},{k})", "shadow_masks", (level,)),
        (f"shade_masks on C({n},{k})", "shade_masks", (level, n)),
        (f"new_shadow_masks on C({n},{k})", "new_shadow_masks", (level, n)),
        (f"new_shade_masks on C({n},{k})", "new_shade_masks", (level, n)),
        (f"prefix_shadow_sizes on C({n},{k})", "prefix_shadow_sizes", (level,)),
        (f"suffix_shade_sizes on C({n},{k})", "suffix_shade_sizes", (level, n)),
        (f"scan_pairs over {len(families)}^2 antichain pairs",
         "scan_pairs", (families, 3, False, False, 0, len(families))),
    ]


def _best_ms(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number * 1000.0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12, help="ground-set size for the level workload")
    ap.add_argument("--k", type=int, default=6, help="set size for the level workload")
    ap.add_argument("--pairs-n", type=int, default=4, choices=range(1, 6),
                    help="cube size for the antichain pair scan")
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions, best is kept")
    args = ap.parse_args(argv)

    if _speedups is None:
        print("compiled backend not available; timing the pure kernels only")

    rows = []
    for label, name, call_args in _workloads(args.n, args.k, args.pairs_n):
        pure_fn = getattr(_pure, name)
        if _speedups is not None:
            fast_fn = getattr(_speedups, name)
            if pure_fn(*call_args) != fast_fn(*call_args):
                raise AssertionError(f"backend results differ for {name}")
            fast_ms = _best_ms(fast_fn, call_args, args.repeat)
        else:
            fast_ms = None
        pure_ms = _best_ms(pure_fn, call_args, args.repeat)
        rows.append((label, pure_ms, fast_ms))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure (ms)':>10}  {'compiled (ms)':>14}  {'speedup':>8}")
    for label, pure_ms, fast_ms in rows:
        if fast_ms is None:
            print(f"{label:<{width}}  {pure_ms:>10.3f}  {'-':>14}  {'-':>8}")
        else:
            print(f"{label:<{width}}  {pure_ms:>10.3f}  {fast_ms:>14.3f}  "
                  f"{pure_ms / fast_ms:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
