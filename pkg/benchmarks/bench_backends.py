"""Compiled vs pure-Python verdict time on random 2-connected graphs.

    python3 benchmarks/bench_backends.py --m 100000 1000000 --repeat 3

Prints one row per (size, backend) and the python/compiled speedup per size.
"""

import argparse

from chaindecomp import available_backends
from chaindecomp.bench import bench_sizes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=[10_000, 100_000, 1_000_000], help="target edge counts")
    ap.add_argument("--chords", type=float, default=3.0, help="extra chords per vertex")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    sizes = [max(3, round(m / (1 + args.chords))) for m in args.m]
    backends = available_backends()
    rows = bench_sizes(sizes, args.chords, args.seed, args.repeat, backends)

    print(f"{'m':>9} {'backend':>9} {'median ms':>10} {'ns/edge':>8}")
    for r in rows:
        print(f"{r['m']:>9} {r['backend']:>9} {r['median_ms']:>10.2f} {r['per_edge_ns']:>8.0f}")
    if {"compiled", "python"} <= set(backends):
        print()
        for m in dict.fromkeys(r["m"] for r in rows):
            t = {r["backend"]: r["median_ms"] for r in rows if r["m"] == m}
            print(f"m={m}: compiled is {t['python'] / t['compiled']:.1f}x faster")
    else:
        print("\ncompiled backend not built; only the python fallback was timed")


if __name__ == "__main__":
    main()
