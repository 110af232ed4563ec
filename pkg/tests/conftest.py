"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: the tensor
oracle is a plain Python triple loop, and spectral oracles use
numpy.linalg.eigvalsh rather than the package's Jacobi solver.
"""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from cohconf.core import Graph


def brute_force_tensor(cell: np.ndarray) -> tuple[dict, np.ndarray]:
    """Aggregate triple-loop count: totals[(i,j,k)] = number of (alpha, beta,
    gamma) with classes (i, j, k) on ((a,g), (g,b), (a,b)).  For a coherent
    partition, totals[(i,j,k)] = p[i,j]^k * |R_k| exactly."""
    n = cell.shape[0]
    rows = [[int(x) for x in row] for row in cell]
    totals: dict[tuple[int, int, int], int] = {}
    for a in range(n):
        ra = rows[a]
        for g in range(n):
            iag = ra[g]
            rg = rows[g]
            for b in range(n):
                key = (iag, rg[b], ra[b])
                totals[key] = totals.get(key, 0) + 1
    sizes = np.bincount(cell.ravel())
    return totals, sizes


def assert_tensor_matches_oracle(cc) -> None:
    totals, sizes = brute_force_tensor(cc.partition.cell)
    seen = set()
    for (i, j, k), total in totals.items():
        size = int(sizes[k])
        assert total % size == 0, f"count for {(i, j, k)} not divisible by |R_{k}|"
        assert cc.intersection_number(i, j, k) == total // size
        seen.add((i, j, k))
    for key, value in cc.p.items():
        assert value > 0
        assert key in seen


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                a[i, j] = a[j, i] = 1
    return Graph(n, a)


def graph_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by brute force; only sensible for n <= 8."""
    a = g.adjacency
    out = []
    for perm in itertools.permutations(range(g.n)):
        p = np.asarray(perm)
        if np.array_equal(a[np.ix_(p, p)], a):
            out.append(perm)
    return out


def orbit_partition_on_pairs(g: Graph) -> np.ndarray:
    """Orbits of the full automorphism group on ordered pairs (brute force)."""
    autos = graph_automorphisms(g)
    n = g.n
    orbit = np.full((n, n), -1, dtype=np.int64)
    nxt = 0
    for x in range(n):
        for y in range(n):
            if orbit[x, y] != -1:
                continue
            stack = [(x, y)]
            orbit[x, y] = nxt
            while stack:
                u, v = stack.pop()
                for p in autos:
                    uu, vv = p[u], p[v]
                    if orbit[uu, vv] == -1:
                        orbit[uu, vv] = nxt
                        stack.append((uu, vv))
            nxt += 1
    return orbit


@pytest.fixture(scope="session")
def petersen():
    from cohconf.constructions import petersen_graph

    return petersen_graph()
