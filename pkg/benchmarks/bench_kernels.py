"""Benchmark the compiled enumeration kernels against the pure fallback.

Both backends are imported directly into one process, so the comparison does
not depend on LIECROSS_PURE or on which backend the library picked at import.
Each workload scans a full matrix space and the two backends must return the
same survivor indices; a mismatch aborts the run.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import statistics
import time

from liecross import FieldSpec, LieAlgebra
from liecross._kernels import pure

try:
    from liecross._kernels import _native as native
except ImportError:
    native = None


def _flat_structure(algebra):
    n = algebra.dim
    c = algebra.structure
    return tuple(c[i][j][k].num
                 for i in range(n) for j in range(n) for k in range(n))


def _heisenberg(p):
    return LieAlgebra.from_sparse_brackets("h3", FieldSpec.prime(p), 3,
                                           [(1, 2, {3: 1})])


def _workloads():
    # The adjoint action table equals the bracket table, so the flattened
    # structure constants double as the act argument of scan_derivations.
    for p in (3, 5):
        br = _flat_structure(_heisenberg(p))
        total = p ** 9
        yield (f"lie endos h3/GF({p}), {p}^9", "scan_lie_morphisms",
               (p, br, br, 3, 3), total)
        yield (f"adjoint derivations h3/GF({p}), {p}^9", "scan_derivations",
               (p, br, br, br, 3, 3), total)


def bench(fn, args, total, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = list(fn(*args, 0, total))
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per workload (default 3)")
    args = parser.parse_args()

    backends = [("pure", pure)]
    if native is not None:
        backends.append(("native", native))
    else:
        print("compiled backend not importable; timing pure only")

    header = f"{'workload':38s}" + "".join(
        f"{name + ' (s)':>13s}" for name, _ in backends)
    if native is not None:
        header += f"{'speedup':>10s}"
    print(header)
    for name, attr, kargs, total in _workloads():
        row = f"{name:38s}"
        results = []
        best = {}
        for bname, mod in backends:
            lo, _, res = bench(getattr(mod, attr), kargs, total, args.repeat)
            best[bname] = lo
            results.append(res)
            row += f"{lo:13.4f}"
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backend mismatch on: {name}")
        if native is not None:
            row += f"{best['pure'] / best['native']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
