"""Benchmark the compiled kernels against the pure-Python fallback.

Run with ``python -m cohconf.bench [--n N] [--repeat R]``.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ._kernels import available_backends
from .core import RelationPartition
from .wl import PairColoring, wl_refinement


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(n: int = 60, repeat: int = 3) -> None:
    rng = np.random.default_rng(7)
    adj = rng.integers(0, 2, size=(n, n))
    adj = np.triu(adj, 1)
    adj = adj + adj.T
    colors = np.where(np.eye(n, dtype=bool), 0, np.where(adj > 0, 1, 2)).astype(np.int64)
    start = RelationPartition.from_cell(colors)
    sym = rng.standard_normal((n, n))
    sym = sym + sym.T

    backends = available_backends()
    print(f"kernel benchmark: n = {n}, repeat = {repeat} (best of)")
    header = f"{'kernel':<24}" + "".join(f"{name:>12}" for name in backends)
    print(header)
    rows = [
        ("signature_ids", lambda b: b.signature_ids(start.cell, start.r)),
        ("jacobi_eigenvalues", lambda b: b.jacobi_eigenvalues(sym, 1e-10, 100)),
    ]
    for label, call in rows:
        cells = []
        for name, mod in backends.items():
            cells.append(f"{_time(lambda: call(mod), repeat) * 1e3:>10.2f}ms")
        print(f"{label:<24}" + "".join(cells))

    # end-to-end closure timing per backend
    import os

    cells = []
    for name in backends:
        os.environ["COHCONF_BACKEND"] = name
        try:
            cells.append(
                f"{_time(lambda: wl_refinement(PairColoring(n, colors)), repeat) * 1e3:>10.2f}ms"
            )
        finally:
            os.environ.pop("COHCONF_BACKEND", None)
    print(f"{'wl_refinement':<24}" + "".join(cells))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    run(args.n, args.repeat)


if __name__ == "__main__":
    main()
