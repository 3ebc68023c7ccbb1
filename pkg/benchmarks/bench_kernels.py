"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel and workload with the best-of-N time for each
backend and the speedup.  Outputs are compared for equality before timing.
"""

import argparse
import sys
import timeit

from hyperchrom import kernels
from hyperchrom.hypercore import complete_uniform, random_uniform, tight_cycle

WORKLOADS = [
    ("signed_component_counts", "tight_cycle(16,3)", lambda k: k.signed_component_counts(16, list(tight_cycle(16, 3).edge_masks))),
    ("signed_component_counts", "random(9,3,p=.2)", lambda k: k.signed_component_counts(9, list(random_uniform(9, 3, 0.2, 1).edge_masks))),
    ("count_colorings", "complete_uniform(7,3), q=6", lambda k: k.count_colorings(7, list(complete_uniform(7, 3).edge_masks), 6)),
    ("partition_profile", "tight_cycle(10,3)", lambda k: k.partition_profile(10, list(tight_cycle(10, 3).edge_masks))),
    ("admissible_counts", "random(10,3,p=.4)", lambda k: k.admissible_counts(10, list(random_uniform(10, 3, 0.4, 2).edge_masks))),
    ("hyperforest_table", "random(8,3,p=.3)", lambda k: k.hyperforest_table(list(random_uniform(8, 3, 0.3, 4).edge_masks))),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    py, cy = impls["python"], impls["cython"]
    print(f"{'kernel':<24} {'workload':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, label, fn in WORKLOADS:
        if fn(py) != fn(cy):
            print(f"{name}: backends disagree on {label}", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:<24} {label:<28} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
