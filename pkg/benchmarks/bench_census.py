"""Time the orbit-labelling kernel under both backends.

    python3 benchmarks/bench_census.py [--primes 7 11 13] [--repeat 3]
"""

import argparse
import time

import numpy as np

from orbitkit.fields import GF
from orbitkit.verify import _kernels
from orbitkit.verify.census import action_matrix, generators


def table(p):
    mats = np.stack([action_matrix(w) for w in generators(GF(p))])
    return _kernels.permutation_table(mats, p)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11, 13])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if "numba" in backends:
        _kernels.orbit_labels(table(3), "numba")  # compile outside the timing

    print(f"{'p':>3} {'points':>8} " + " ".join(f"{b:>10}" for b in backends) + "  orbits")
    for p in args.primes:
        perms = table(p)
        results = {}
        for b in backends:
            results[b] = best_of(lambda: _kernels.orbit_labels(perms, b), args.repeat)
        labels = [r[1] for r in results.values()]
        assert all(np.array_equal(labels[0], x) for x in labels[1:]), "backends disagree"
        n_orbits = len(np.unique(labels[0]))
        print(f"{p:>3} {p**4:>8} " + " ".join(f"{results[b][0]*1e3:>8.2f}ms" for b in backends) + f"  {n_orbits}")


if __name__ == "__main__":
    main()
