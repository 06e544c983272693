"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints the best wall time per workload and backend, and checks that both
backends return identical results on every workload.
"""

from __future__ import annotations

import argparse
import random
import timeit

from newton_strata.kernels import available_backends


def enumeration_workloads():
    # (label, n, c, lo, hi, unit): wide boxes around the origin
    out = []
    for n, width in ((3, 8), (4, 6), (5, 5)):
        unit = 60
        lo = [-width * unit] * (2 * n)
        hi = [width * unit] * (2 * n)
        out.append((f"paths n={n} box=[-{width},{width}]", n, 0, lo, hi, unit))
    return out


def condition_workload(seed=1, count=5000, n=4):
    rng = random.Random(seed)
    unit = 60
    pairs = []
    for _ in range(count):
        b = sorted((rng.randint(-3 * unit, 3 * unit) for _ in range(2 * n)), reverse=True)
        bt = sorted((x - rng.choice([0, unit, rng.randint(0, unit)]) for x in b), reverse=True)
        pairs.append((b, bt))
    return unit, pairs


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    backends = available_backends()
    if len(backends) < 2:
        print("compiled backend not built; only timing the pure-Python kernels")

    rows = []
    for label, n, c, lo, hi, unit in enumeration_workloads():
        results = {}
        for name, mod in backends.items():
            fn = lambda mod=mod: mod.symplectic_paths(n, c, lo, hi, unit, -1)
            results[name] = fn()
            best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            rows.append((label, name, best, len(results[name][0])))
        assert len({repr(r) for r in results.values()}) == 1, f"backends disagree on {label}"

    unit, pairs = condition_workload()
    results = {}
    for name, mod in backends.items():
        fn = lambda mod=mod: [mod.ordinary_conditions(b, bt, unit) for b, bt in pairs]
        results[name] = fn()
        best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        rows.append((f"conditions x{len(pairs)} n=4", name, best, sum(r == 0 for r in results[name])))
    assert len({repr(r) for r in results.values()}) == 1, "backends disagree on conditions"

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'backend':<7}  {'best [ms]':>10}  {'output':>8}")
    for label, name, best, size in rows:
        print(f"{label:<{width}}  {name:<7}  {best * 1000:>10.2f}  {size:>8}")
    if "cython" in backends:
        by = {(r[0], r[1]): r[2] for r in rows}
        for label in dict.fromkeys(r[0] for r in rows):
            print(f"speedup {label}: {by[(label, 'python')] / by[(label, 'cython')]:.2f}x")


if __name__ == "__main__":
    main()
