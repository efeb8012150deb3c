"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: operator tables on F2 (864 sub-M-sets) and on a larger random
space, plus the topology scan over every family of {3/a,3/b}.  Each row
prints the best wall time per backend; the first numba call (JIT compile or
cache load) is excluded.
"""

import argparse
import time
from pathlib import Path

import numpy as np

from mtopo import MSpace, MSet, load_space, random_topology
from mtopo import kernels
from mtopo.lattice import sublattice

HERE = Path(__file__).resolve().parent
F2 = HERE.parent / "tests" / "data" / "f2.json"


def _table_args(topo):
    lat = sublattice(topo.ground)
    opens = np.array([u.counts for u in topo.opens], dtype=np.int64)
    closed = np.array([k.counts for k in topo.closed], dtype=np.int64)
    return lat, opens, closed


def workloads():
    f2 = load_space(F2)
    big = random_topology(MSet(MSpace(tuple("abcde"), 4), (4, 3, 4, 2, 3)), seed=1, size_hint=12)
    for name, topo in (("F2", f2), ("random d=5", big)):
        lat, opens, closed = _table_args(topo)
        g = lat.ground_vec
        yield f"interior   {name} n={len(lat)}", "interior", (lat.vectors, opens)
        yield f"closure    {name} n={len(lat)}", "closure", (lat.vectors, closed, g)
        yield f"limit_hull {name} n={len(lat)}", "limit_hull", (lat.vectors, opens, g)
    lat = sublattice(MSet(MSpace(("a", "b"), 3), (3, 3)))
    total = 1 << (len(lat) - 2)
    yield f"scan       {{3/a,3/b}} families={total}", "scan_families", (
        lat.join_table(),
        lat.meet_table(),
        0,
        total,
    )


def best_of(fn, args, repeat):
    fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"{'workload':42s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, kernel, kargs in workloads():
        times = {n: best_of(kernels.BACKENDS[n][kernel], kargs, args.repeat) for n in names}
        ref = [np.asarray(kernels.BACKENDS[n][kernel](*kargs)) for n in names]
        assert all(np.array_equal(ref[0], r) for r in ref[1:]), label
        speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        row = "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        print(f"{label:42s}{row}{speed:9.1f}x")


if __name__ == "__main__":
    main()
