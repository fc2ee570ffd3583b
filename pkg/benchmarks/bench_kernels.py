"""Compare the pure and compiled kernels on representative workloads.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Both implementations are imported directly, so the timings are unaffected
by the PICBOUNDARY_PURE selection that normal imports go through.
"""

import argparse
import time

from picboundary import FamilyElement, NumericalSemigroup
from picboundary import _kernels_py
from picboundary.deformations import family_module

try:
    from picboundary import _kernels
except ImportError:
    _kernels = None


def _ring(gens):
    return NumericalSemigroup.from_generators(gens)


def _module_rows(text, gens):
    S = _ring(gens)
    return family_module(FamilyElement.parse(text), S, normalize=True), S.conductor


def build_workloads(quick):
    scale = 1 if quick else 5
    workloads = []

    S16 = _ring([4, 13, 18, 19])
    shifts16 = [g for g in S16.minimal_generators if g < S16.conductor]
    workloads.append(
        (
            "closed_subsets v0=16 colength-11",
            lambda impl: impl.closed_subsets(16, shifts16, 5),
            2 * scale,
        )
    )

    S12 = _ring([7, 9, 12, 13, 15, 17])
    shifts12 = [g for g in S12.minimal_generators if g < S12.conductor]
    workloads.append(
        (
            "closed_subsets v0=12 all sizes",
            lambda impl: [impl.closed_subsets(12, shifts12, d) for d in range(13)],
            20 * scale,
        )
    )

    rows_a, v0_a = _module_rows("t^7 + b*t^8 + b^2*t^4 + b^3*t^2 + b^4",
                                [7, 9, 12, 13, 15, 17])
    workloads.append(
        (
            "reduce_rows 5-term family v0=12",
            lambda impl: impl.reduce_rows(
                [list(r) for r in rows_a], v0_a, 10000
            ),
            50 * scale,
        )
    )

    rows_b, v0_b = _module_rows("t^4 + b*t^2 + b^2*t + b^3", [5, 7, 9, 11, 13])
    workloads.append(
        (
            "reduce_rows 4-term family v0=9",
            lambda impl: impl.reduce_rows(
                [list(r) for r in rows_b], v0_b, 10000
            ),
            100 * scale,
        )
    )

    return workloads


def bench(fn, impl, inner, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn(impl)
        dt = (time.perf_counter() - t0) / inner
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernel not built; run pip install -e . first")
        return 1

    print(f"{'workload':40} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn, inner in build_workloads(args.quick):
        pure = bench(fn, _kernels_py, inner, args.repeat)
        fast = bench(fn, _kernels, inner, args.repeat)
        print(
            f"{label:40} {pure * 1e3:9.3f}ms {fast * 1e3:9.3f}ms"
            f" {pure / fast:7.2f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
