"""Compare the vectorized subset-pattern kernel against the pure fallback.

Both kernels enumerate the distinct centred patterns of every k-subset of a
pin diagram's points (the hot loop of the subset census). Run directly:

    python3 benchmarks/bench_subset_kernel.py [--steps N] [--depth K]
"""

import argparse
import time

from pinclasses import _patterns
from pinclasses.pimap import diagram_points
from pinclasses.pinword import parse_pin_spec


def build_points(steps: int):
    spec = parse_pin_spec("2ruldlurdr(ul)*")
    word = spec.initial_word(steps)
    return diagram_points(word)


def run(kernel, points, depth: int):
    origin = points[0]
    start = time.perf_counter()
    out = kernel(points, origin, depth)
    elapsed = time.perf_counter() - start
    return out, elapsed


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=24, help="diagram points")
    parser.add_argument("--depth", type=int, default=5, help="largest subset size")
    args = parser.parse_args()

    points = build_points(args.steps)
    print(f"diagram: {len(points)} points, subsets up to size {args.depth}")

    numpy_out, numpy_s = run(_patterns.subset_patterns_numpy, points, args.depth)
    pure_out, pure_s = run(_patterns.subset_patterns_pure, points, args.depth)

    if numpy_out != pure_out:
        print("MISMATCH between kernels — this is a bug")
        return 1

    total = sum(len(v) for v in numpy_out.values())
    print(f"distinct patterns: {total}")
    print(f"numpy kernel: {numpy_s:8.3f}s")
    print(f"pure kernel:  {pure_s:8.3f}s")
    if numpy_s > 0:
        print(f"speedup:      {pure_s / numpy_s:8.1f}x")
    print(f"selected backend at import: {_patterns.BACKEND}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
