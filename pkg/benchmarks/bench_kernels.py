"""Compare the compiled and numpy elimination backends.

    python3 benchmarks/bench_kernels.py [--sizes 100,200,400] [--p 3] [--repeat 3]

Also times one full colength computation with each backend.
"""
import argparse
import time

import numpy as np

from hkmult import kernels
from hkmult.frobenius import colength_quadric, parse_ring_spec


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,200,400,800")
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled extension not built; timing the numpy backend only")
    rng = np.random.default_rng(0)
    print(f"{'n':>6}" + "".join(f"{b:>12}" for b in backends) + "   rank")
    for n in (int(s) for s in args.sizes.split(",")):
        m = rng.integers(0, args.p, size=(n, n), dtype=np.int64)
        row, ranks = [], set()
        for b in backends:
            t, r = best_of(lambda: kernels.rank_mod_p(m, args.p, backend=b), args.repeat)
            row.append(t)
            ranks.add(r)
        assert len(ranks) == 1, ranks
        print(f"{n:>6}" + "".join(f"{t:>11.4f}s" for t in row) + f"   {ranks.pop()}")

    spec = parse_ring_spec("quadric{p=3; d=3; phi=y^2+z^2+w^2}")
    print("\nquadric d=3, p=3, q=27")
    for b in backends:
        t, n = best_of(lambda: colength_quadric(spec, 27, backend=b), 1)
        print(f"  {b:>7}: length {n} in {t:.3f}s")


if __name__ == "__main__":
    main()
