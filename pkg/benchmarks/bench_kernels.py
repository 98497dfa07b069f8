"""Compare the compiled kernels against the pure Python twin.

Runs the same workloads through both modules and prints a table with the
best-of-3 wall time for each, plus the speedup.  Usage:

    python benchmarks/bench_kernels.py
"""

import time

from gisalg import _kernels_py
from gisalg.elements import enumerate_elements
from gisalg.fixtures import bouquet, loopx

try:
    from gisalg import _kernels
except ImportError:
    _kernels = None


def workload_raws():
    graph = bouquet(2)
    raws = [e.raw() for e in enumerate_elements(graph, 5) if not e.is_zero]
    return raws


def bench_mul(kernels, raws):
    mul = kernels.mul
    for a in raws:
        for b in raws:
            mul(a, b)


def bench_leq(kernels, raws):
    leq = kernels.leq
    for a in raws:
        for b in raws:
            leq(a, b)


def bench_saturate(kernels, universe, gens):
    kernels.saturate(universe, gens)


def best_of(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    raws = workload_raws()
    graph = loopx()
    universe = frozenset(
        e.raw() for e in enumerate_elements(graph, 6) if not e.is_zero
    )
    gens = [e.raw() for e in enumerate_elements(graph, 2) if not e.is_zero]

    rows = [
        ("mul sweep", bench_mul, (raws,)),
        ("leq sweep", bench_leq, (raws,)),
        ("saturate", bench_saturate, (universe, gens)),
    ]

    print(f"element pairs per sweep: {len(raws)}^2 = {len(raws) ** 2}")
    print(f"saturate universe size: {len(universe)}, generators: {len(gens)}")
    print()
    header = f"{'workload':<12} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn, args in rows:
        pure = best_of(fn, _kernels_py, *args)
        if _kernels is None:
            print(f"{name:<12} {pure:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        comp = best_of(fn, _kernels, *args)
        speedup = pure / comp if comp > 0 else float("inf")
        print(f"{name:<12} {pure:>10.4f} {comp:>13.4f} {speedup:>7.1f}x")
    if _kernels is None:
        print()
        print("compiled extension not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
