"""Compare the compiled and pure-Python graph kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the 1-skeleta of a few generated complexes with both
backends; outputs are checked equal before timings are reported.
"""
from __future__ import annotations

import argparse
import timeit

from systolic import kernels
from systolic.generators import flat_torus, glued_halfplanes, triangular_disk


def workloads():
    for g, lmax in ((triangular_disk(12), 6), (flat_torus(20), 6), (glued_halfplanes(3, 10), 6)):
        _, _, indptr, indices = g.complex.csr()
        yield g.label, "bfs_distances", lambda impl, a=indptr, b=indices: kernels.bfs_distances(a, b, [0], impl=impl)
        yield g.label, "component_labels", lambda impl, a=indptr, b=indices: kernels.component_labels(a, b, impl=impl)
        yield g.label, f"induced_cycles(<{lmax})", (
            lambda impl, a=indptr, b=indices, m=lmax: kernels.induced_cycles(a, b, m - 1, impl=impl))


def _same(a, b):
    try:
        return list(map(int, a)) == list(map(int, b))
    except TypeError:
        return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    impls = kernels.implementations()
    if "cython" not in impls:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'complex':<26}{'kernel':<22}" + "".join(f"{n + ' ms':>12}" for n in impls) + f"{'speedup':>10}")
    for label, kname, fn in workloads():
        outs = {n: fn(impl) for n, impl in impls.items()}
        if "cython" in outs:
            assert _same(outs["python"], outs["cython"]), f"backends disagree on {kname} for {label}"
        times = {n: min(timeit.repeat(lambda i=impl: fn(i), number=1, repeat=args.repeat)) * 1e3
                 for n, impl in impls.items()}
        speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
        print(f"{label:<26}{kname:<22}" + "".join(f"{t:>12.2f}" for t in times.values()) + speed)


if __name__ == "__main__":
    main()
