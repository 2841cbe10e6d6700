#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times three workloads per backend: the dihedral canonical form on random
words (micro), enumeration of all quiddity classes up to a length
(macro), and a 27-pattern cover verification over that enumeration
(macro).  Run from the repository root:

    python3 benchmarks/benchmark_kernels.py [--length 13] [--repeat 3]
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quiddity import kernels  # noqa: E402
from quiddity.kernels import available_backends  # noqa: E402


def reset_enumeration_cache():
    from quiddity import cycles

    cycles._levels.clear()
    cycles._levels[2] = frozenset({(0, 0)})
    cycles._level_cycles.clear()


def bench_canonical(mod, words, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for w in words:
            mod.canonical_form(w)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_enumerate(length, repeat):
    from quiddity.cycles import _canon_level

    best = float("inf")
    for _ in range(repeat):
        reset_enumeration_cache()
        t0 = time.perf_counter()
        _canon_level(length)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_cover(length, repeat):
    from quiddity.localdesc import BUILTIN_PAIRS, verify_cover

    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = verify_cover(BUILTIN_PAIRS["cor12"], length)
        best = min(best, time.perf_counter() - t0)
        assert report.ok
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--length", type=int, default=13, help="enumeration length")
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args(argv)

    rng = random.Random(12345)
    words = [
        tuple(rng.randint(0, 8) for _ in range(rng.randint(4, 16))) for _ in range(20000)
    ]

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "c" not in backends:
        print("note: compiled extension not built; run "
              "`python3 setup.py build_ext --inplace` to compare backends")

    results = {}
    for name in backends:
        kernels.set_backend(name)
        results[name] = {
            "canonical_form x20k": bench_canonical(kernels, words, args.repeat),
            f"enumerate to {args.length}": bench_enumerate(args.length, args.repeat),
            f"cover check to {args.length}": bench_cover(args.length, args.repeat),
        }
    kernels.set_backend(backends[-1])

    workloads = list(next(iter(results.values())))
    width = max(len(w) for w in workloads) + 2
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print()
    print(header)
    print("-" * len(header))
    for w in workloads:
        line = f"{w:<{width}}"
        for b in backends:
            line += f"{results[b][w]:>11.3f}s"
        if len(backends) > 1:
            line += f"{results['python'][w] / results['c'][w]:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
