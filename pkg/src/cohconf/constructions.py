"""Concrete builders: Paley structures, triangular graphs, Steiner triple
systems and their block graphs, line/distance constructions, disjoint unions,
and permutation-group orbital configurations.

Finite fields are restricted to prime order: the desk-scale examples need
only small primes, and prime-power fields would add irrelevant machinery.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import Graph, RelationPartition
from .errors import BadModulus, BadOrder, Disconnected
from .spectra import SrgParams
from .wl import PairColoring


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _quadratic_residues(q: int) -> set[int]:
    return {(x * x) % q for x in range(1, q)}


def paley_graph(q: int) -> Graph:
    """Vertices Z_q, edges {x, y} with x - y a nonzero square mod q.
    Requires q prime, q = 1 (mod 4); SRG(q, (q-1)/2, (q-5)/4, (q-1)/4)."""
    if not _is_prime(q) or q % 4 != 1:
        raise BadModulus(f"paley_graph needs a prime q = 1 (mod 4), got {q}")
    squares = _quadratic_residues(q)
    a = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        for y in range(x + 1, q):
            if (x - y) % q in squares:
                a[x, y] = a[y, x] = 1
    return Graph(q, a)


def paley_tournament(q: int) -> RelationPartition:
    """Rank-3 partition of Z_q x Z_q: diagonal, arcs x -> y with y - x a
    square, and the reversed arcs.  Requires q prime, q = 3 (mod 4)."""
    if not _is_prime(q) or q % 4 != 3:
        raise BadModulus(f"paley_tournament needs a prime q = 3 (mod 4), got {q}")
    squares = _quadratic_residues(q)
    cell = np.full((q, q), 2, dtype=np.int64)
    np.fill_diagonal(cell, 0)
    for x in range(q):
        for y in range(q):
            if x != y and (y - x) % q in squares:
                cell[x, y] = 1
    return RelationPartition(q, 3, cell)


def triangular_graph(m: int) -> Graph:
    """T(m): vertices are the 2-subsets of an m-set, adjacent when they
    intersect; SRG(m(m-1)/2, 2(m-2), m-2, 4) for m >= 4."""
    if m < 4:
        raise ValueError("triangular_graph needs m >= 4")
    verts = list(itertools.combinations(range(m), 2))
    nv = len(verts)
    a = np.zeros((nv, nv), dtype=np.int64)
    for i in range(nv):
        si = set(verts[i])
        for j in range(i + 1, nv):
            if si & set(verts[j]):
                a[i, j] = a[j, i] = 1
    return Graph(nv, a)


def petersen_graph() -> Graph:
    """Complement of T(5): disjoint 2-subsets of a 5-set."""
    return triangular_graph(5).complement()


# ---------------------------------------------------------------------------
# Steiner triple systems


@dataclass(frozen=True)
class Design:
    """Uniform block design verified to be a Steiner system S(2, k, v):
    every 2-subset of points lies in exactly one block."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise ValueError("blocks must have uniform size")
        cover: dict[tuple[int, int], int] = {}
        for b in blocks:
            if len(set(b)) != len(b) or min(b) < 0 or max(b) >= self.v:
                raise ValueError(f"invalid block {b}")
            for pair in itertools.combinations(b, 2):
                cover[pair] = cover.get(pair, 0) + 1
        if len(cover) != self.v * (self.v - 1) // 2 or any(c != 1 for c in cover.values()):
            raise ValueError("not a Steiner system: some pair is not covered exactly once")
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


def _bose_sts(v: int) -> list[tuple[int, int, int]]:
    # v = 6t+3: points Z_q x {0,1,2} with q = 2t+1; idempotent commutative
    # quasigroup x*y = (x+y)/2 mod q
    t = (v - 3) // 6
    q = 2 * t + 1
    inv2 = pow(2, -1, q)
    pt = lambda x, i: x + i * q
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x in range(q):
        for y in range(x + 1, q):
            z = ((x + y) * inv2) % q
            for i in range(3):
                blocks.append((pt(x, i), pt(y, i), pt(z, (i + 1) % 3)))
    return blocks


def _skolem_sts(v: int) -> list[tuple[int, int, int]]:
    # v = 6t+1: points (Z_2t x {0,1,2}) + infinity, with the half-idempotent
    # commutative quasigroup sigma((x+y) mod 2t), sigma(2i)=i, sigma(2i+1)=t+i
    t = (v - 1) // 6
    m = 2 * t

    def op(x: int, y: int) -> int:
        z = (x + y) % m
        return z // 2 if z % 2 == 0 else t + (z - 1) // 2

    inf = v - 1
    pt = lambda x, i: x + i * m
    blocks = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(t)]
    for i in range(t, m):
        for k in range(3):
            blocks.append((inf, pt(i, k), pt(i - t, (k + 1) % 3)))
    for x in range(m):
        for y in range(x + 1, m):
            for k in range(3):
                blocks.append((pt(x, k), pt(y, k), pt(op(x, y), (k + 1) % 3)))
    return blocks


def steiner_triple_system(v: int) -> Design:
    """A Steiner triple system S(2,3,v) for v = 1 or 3 (mod 6), v >= 7
    (Bose construction for v = 3 mod 6, Skolem for v = 1 mod 6)."""
    if v < 7 or v % 6 not in (1, 3):
        raise BadOrder(f"no STS({v}): need v = 1 or 3 (mod 6), v >= 7")
    blocks = _bose_sts(v) if v % 6 == 3 else _skolem_sts(v)
    return Design(v, tuple(blocks))


def block_graph(d: Design) -> Graph:
    """Vertices are the blocks; two blocks adjacent when they intersect.
    For an S(2,3,13) this is SRG(26,15,8,9)."""
    nb = len(d.blocks)
    sets = [set(b) for b in d.blocks]
    a = np.zeros((nb, nb), dtype=np.int64)
    for i in range(nb):
        for j in range(i + 1, nb):
            if sets[i] & sets[j]:
                a[i, j] = a[j, i] = 1
    return Graph(nb, a)


# ---------------------------------------------------------------------------
# line graphs, distance partitions, unions


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g (lexicographic); adjacency = sharing an
    endpoint."""
    edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.adjacency[i, j]]
    ne = len(edges)
    a = np.zeros((ne, ne), dtype=np.int64)
    for x in range(ne):
        ex = set(edges[x])
        for y in range(x + 1, ne):
            if ex & set(edges[y]):
                a[x, y] = a[y, x] = 1
    return Graph(ne, a)


def distance_matrix(g: Graph) -> np.ndarray:
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for s in range(g.n):
        dist[s, s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in np.nonzero(g.adjacency[u])[0]:
                w = int(w)
                if dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue.append(w)
    return dist


def distance_partition(g: Graph) -> PairColoring:
    """Pairs colored by graph distance; coherence of the resulting partition
    is exactly distance-regularity.  Raises Disconnected."""
    dist = distance_matrix(g)
    if (dist < 0).any():
        raise Disconnected("distance_partition needs a connected graph")
    return PairColoring(g.n, dist)


def disjoint_union_complete(copies: int, size: int) -> Graph:
    """Disjoint union of ``copies`` complete graphs K_size."""
    if copies < 1 or size < 1:
        raise ValueError("copies and size must be positive")
    n = copies * size
    a = np.zeros((n, n), dtype=np.int64)
    for c in range(copies):
        lo = c * size
        a[lo : lo + size, lo : lo + size] = 1
    np.fill_diagonal(a, 0)
    return Graph(n, a)


def fano_incidence_graph() -> Graph:
    """Point-block incidence graph of the Fano plane (the 14-vertex cubic
    bipartite cage)."""
    fano = steiner_triple_system(7)
    a = np.zeros((14, 14), dtype=np.int64)
    for j, b in enumerate(fano.blocks):
        for p in b:
            a[p, 7 + j] = a[7 + j, p] = 1
    return Graph(14, a)


def heawood_line_scheme():
    """Distance scheme of the line graph of the Fano incidence graph:
    21 points, rank 4, valencies (4, 8, 8), strata (1, 8, 6, 6).

    The valency-4 class has eigenvalues 4, -2, 1 +- sqrt(2)."""
    from .core import verify_coherence  # local import to keep module deps one-way

    lg = line_graph(fano_incidence_graph())
    cc = verify_coherence(distance_partition(lg).to_partition())
    if not (cc.is_homogeneous and cc.rank == 4):
        raise AssertionError("line graph of the Fano incidence graph must give a rank-4 scheme")
    vals = tuple(cc.valencies[i] for i in cc.off_diagonal_classes())
    if vals != (4, 8, 8):
        raise AssertionError(f"unexpected valencies {vals}")
    return cc


# ---------------------------------------------------------------------------
# group orbitals


def _validate_generators(gens, degree: int) -> list[tuple[int, ...]]:
    out = []
    for g in gens:
        img = tuple(int(x) for x in g)
        if sorted(img) != list(range(degree)):
            raise ValueError(f"not a permutation of [0, {degree}): {img}")
        out.append(img)
    return out


def orbital_config(gens, degree: int) -> RelationPartition:
    """Orbit partition of ordered pairs under the group generated by ``gens``
    (orbit BFS applying generators to pairs).  Always coherent."""
    perms = _validate_generators(gens, degree)
    orbit = np.full((degree, degree), -1, dtype=np.int64)
    nxt = 0
    for a in range(degree):
        for b in range(degree):
            if orbit[a, b] != -1:
                continue
            orbit[a, b] = nxt
            queue = deque([(a, b)])
            while queue:
                x, y = queue.popleft()
                for g in perms:
                    u, v = g[x], g[y]
                    if orbit[u, v] == -1:
                        orbit[u, v] = nxt
                        queue.append((u, v))
            nxt += 1
    return RelationPartition(degree, nxt, orbit)


def srg_parameters(g: Graph) -> SrgParams | None:
    """Extract (n, k, lambda, mu) by brute-force common-neighbour counting;
    None if the graph is not strongly regular (or has no edge/non-edge)."""
    n = g.n
    a = g.adjacency
    degs = set(a.sum(axis=1).tolist())
    if len(degs) != 1:
        return None
    k = int(next(iter(degs)))
    common = a @ a
    off = ~np.eye(n, dtype=bool)
    lam_vals = set(common[(a > 0)].tolist())
    mu_vals = set(common[(a == 0) & off].tolist())
    if len(lam_vals) > 1 or len(mu_vals) > 1:
        return None
    if not lam_vals or not mu_vals:
        return None
    return SrgParams(n, k, int(lam_vals.pop()), int(mu_vals.pop()))
