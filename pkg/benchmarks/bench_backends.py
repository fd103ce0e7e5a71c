"""Timing comparison of the compiled Jacobi core against the numpy backend.

Usage: python benchmarks/bench_backends.py [--repeat N]

Covers the three workloads that matter: small-matrix eigensolves (the per-node
hot kernel), one full scan node, and a small field scan.
"""

import argparse
import time

import numpy as np

from tetraneg import _backend
from tetraneg.scan import Axis, ScanGrid, SpectralTable, field_scan, node_observables


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(backend, repeat):
    rng = np.random.default_rng(12345)
    mats = {}
    for n in (4, 9, 12, 18, 36):
        a = rng.normal(size=(n, n))
        mats[n] = a + a.T
    table = SpectralTable(j1=1.5)
    rho = table.rho(h=2.0, kt=0.3)
    grid = ScanGrid(axes=(Axis("j1_over_j", 0.0, 2.0, 11), Axis("h_over_j", 0.0, 6.0, 11)))

    rows = []
    with _backend.use_backend(backend):
        for n, a in mats.items():
            t = time_call(lambda a=a: [_backend.eigvalsh_sym(a) for _ in range(200)], repeat)
            rows.append((f"eigvalsh {n}x{n} (x200)", t))
        rows.append(("scan node (17 observables)",
                     time_call(lambda: [node_observables(rho) for _ in range(20)], repeat) / 20))
        rows.append(("field scan 11x11", time_call(lambda: field_scan(grid), repeat)))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["pure"]
    if _backend.have_compiled():
        backends.append("compiled")
    else:
        print("compiled core not built; benchmarking the pure backend only")

    results = {b: bench(b, args.repeat) for b in backends}
    width = max(len(name) for name, _ in results[backends[0]])
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for i, (name, _) in enumerate(results[backends[0]]):
        cells = "  ".join(f"{results[b][i][1] * 1e3:>10.3f}ms" for b in backends)
        print(f"{name:<{width}}  {cells}")


if __name__ == "__main__":
    main()
