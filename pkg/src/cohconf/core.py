"""Relation partitions, coherence verification, and derived structure.

A coherent configuration is a partition of Omega x Omega into relation
classes such that (a) the classes partition all ordered pairs, (b) the
diagonal is a union of classes, (c) the transpose of a class is a class, and
(d) for (alpha, beta) in class k, the number of gamma with (alpha, gamma) in
class i and (gamma, beta) in class j depends only on (i, j, k).  The counts
p[i,j]^k form the intersection tensor; the span of the class adjacency
matrices is then closed under multiplication.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .errors import (
    DiagonalNotUnion,
    NotCoherent,
    NotConverseClosed,
    NotHomogeneous,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: symmetric 0/1 adjacency with zero diagonal."""

    n: int
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.int64)
        if a.shape != (self.n, self.n):
            raise ValueError("adjacency shape does not match n")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.diagonal(a).any():
            raise ValueError("adjacency must have zero diagonal")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0/1")
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        a = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            a[u, v] = a[v, u] = 1
        np.fill_diagonal(a, 0)
        return cls(n, a)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.adjacency.sum(axis=1))

    def complement(self) -> "Graph":
        a = 1 - self.adjacency
        np.fill_diagonal(a, 0)
        return Graph(self.n, a)


@dataclass(frozen=True)
class RelationPartition:
    """An n x n matrix of class indices in [0, r), every class non-empty."""

    n: int
    r: int
    cell: np.ndarray

    def __post_init__(self):
        c = np.ascontiguousarray(self.cell, dtype=np.int64)
        if c.shape != (self.n, self.n):
            raise ValueError("cell shape does not match n")
        if self.n == 0:
            raise ValueError("empty point set")
        used = np.unique(c)
        if used[0] < 0 or used[-1] >= self.r or len(used) != self.r:
            raise ValueError("class indices must cover [0, r) with every class non-empty")
        object.__setattr__(self, "cell", c)

    @classmethod
    def from_cell(cls, cell: np.ndarray) -> "RelationPartition":
        """Build from an arbitrary integer matrix, renumbering classes
        contiguously by first occurrence (row-major)."""
        cell = np.asarray(cell, dtype=np.int64)
        flat = cell.ravel()
        _, first = np.unique(flat, return_index=True)
        order = flat[np.sort(first)]
        remap = {int(v): i for i, v in enumerate(order)}
        new = np.vectorize(remap.__getitem__, otypes=[np.int64])(cell)
        return cls(cell.shape[0], len(remap), new)

    def class_pairs(self, i: int) -> np.ndarray:
        """Ordered pairs of class i as an (m, 2) array (row-major order)."""
        rows, cols = np.nonzero(self.cell == i)
        return np.stack([rows, cols], axis=1)

    def class_matrix(self, i: int) -> np.ndarray:
        return (self.cell == i).astype(np.int64)

    def relabel_points(self, perm: Iterable[int]) -> "RelationPartition":
        """Apply a point permutation: point x becomes perm[x]."""
        p = np.asarray(list(perm), dtype=np.int64)
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        new = self.cell[np.ix_(inv, inv)]
        return RelationPartition(self.n, self.r, new)

    def canonical(self) -> "RelationPartition":
        """Renumber classes canonically: diagonal classes first, then
        off-diagonal by ascending pair count, ties by earliest pair."""
        cell = self.cell
        diag_mask = np.eye(self.n, dtype=bool)
        keys = []
        for i in range(self.r):
            mask = cell == i
            on_diag = bool(mask[diag_mask].any())
            first = int(np.flatnonzero(mask.ravel())[0])
            keys.append((0 if on_diag else 1, int(mask.sum()), first, i))
        order = [k[3] for k in sorted(keys)]
        remap = np.empty(self.r, dtype=np.int64)
        remap[np.asarray(order)] = np.arange(self.r)
        return RelationPartition(self.n, self.r, remap[cell])

    def same_partition(self, other: "RelationPartition") -> bool:
        """True if both describe the same partition of Omega x Omega
        (class labels are ignored)."""
        if self.n != other.n or self.r != other.r:
            return False
        a = RelationPartition.from_cell(self.cell)
        b = RelationPartition.from_cell(other.cell)
        return np.array_equal(a.cell, b.cell)


@dataclass(frozen=True)
class CoherentConfig:
    """A verified coherent configuration.

    ``p`` is the intersection tensor stored sparsely as {(i, j, k): count};
    absent triples are zero.  ``valencies[i]`` is the constant row count of
    class i (rows taken in its source fiber).  Immutable after verification;
    all operations on it are pure.
    """

    partition: RelationPartition
    diagonal_classes: frozenset[int]
    converse: tuple[int, ...]
    p: Mapping[tuple[int, int, int], int] = field(repr=False)
    valencies: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def rank(self) -> int:
        return self.partition.r

    @property
    def is_homogeneous(self) -> bool:
        return len(self.diagonal_classes) == 1

    def intersection_number(self, i: int, j: int, k: int) -> int:
        return self.p.get((i, j, k), 0)

    def class_matrix(self, i: int) -> np.ndarray:
        return self.partition.class_matrix(i)

    def off_diagonal_classes(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if i not in self.diagonal_classes)

    def require_homogeneous(self, op: str) -> None:
        if not self.is_homogeneous:
            raise NotHomogeneous(f"{op} requires a homogeneous configuration")


def _pair_signature(cell: np.ndarray, alpha: int, beta: int) -> Counter:
    """Multiset of (class(alpha,gamma), class(gamma,beta)) over gamma."""
    return Counter(zip(cell[alpha, :].tolist(), cell[:, beta].tolist()))


def verify_coherence(part: RelationPartition) -> CoherentConfig:
    """Check the four axioms and compute the intersection tensor.

    Raises DiagonalNotUnion, NotConverseClosed, or NotCoherent (with the
    first deviating pair as witness).  Class labels are preserved.
    """
    cell = part.cell
    n, r = part.n, part.r

    diag = cell[np.arange(n), np.arange(n)]
    diag_classes = set(int(c) for c in np.unique(diag))
    counts = np.bincount(cell.ravel(), minlength=r)
    diag_counts = np.bincount(diag, minlength=r)
    for i in diag_classes:
        if diag_counts[i] != counts[i]:
            raise DiagonalNotUnion(i)

    flat, flat_t = cell.ravel(), cell.T.ravel()
    pairs = np.unique(flat * r + flat_t)
    conv = np.full(r, -1, dtype=np.int64)
    for code in pairs:
        i, j = divmod(int(code), r)
        if conv[i] == -1:
            conv[i] = j
        elif conv[i] != j:
            raise NotConverseClosed(i)

    ids, count = _kernels.signature_ids(cell, r)
    first_pair = {}
    rep_id = np.full(r, -1, dtype=np.int64)
    if count != r:
        # locate the first pair whose signature deviates from its class rep
        for alpha in range(n):
            for beta in range(n):
                k = int(cell[alpha, beta])
                if rep_id[k] == -1:
                    rep_id[k] = ids[alpha, beta]
                    first_pair[k] = (alpha, beta)
                elif ids[alpha, beta] != rep_id[k]:
                    ra, rb = first_pair[k]
                    sig_ref = _pair_signature(cell, ra, rb)
                    sig_dev = _pair_signature(cell, alpha, beta)
                    for key in sorted(set(sig_ref) | set(sig_dev)):
                        if sig_ref.get(key, 0) != sig_dev.get(key, 0):
                            i, j = key
                            raise NotCoherent(
                                i, j, k, (alpha, beta),
                                f"count {sig_dev.get(key, 0)} vs {sig_ref.get(key, 0)} at {first_pair[k]}",
                            )
                    raise AssertionError("signature ids disagree but signatures match")

    tensor: dict[tuple[int, int, int], int] = {}
    valencies = [0] * r
    seen = [False] * r
    for alpha in range(n):
        row = cell[alpha]
        for beta in range(n):
            k = int(row[beta])
            if not seen[k]:
                seen[k] = True
                for (i, j), cnt in _pair_signature(cell, alpha, beta).items():
                    tensor[(int(i), int(j), k)] = int(cnt)
                valencies[k] = int(np.count_nonzero(row == k))
        if all(seen):
            break

    return CoherentConfig(
        partition=part,
        diagonal_classes=frozenset(diag_classes),
        converse=tuple(int(c) for c in conv),
        p=tensor,
        valencies=tuple(valencies),
    )


def is_commutative(cc: CoherentConfig) -> bool:
    """True iff p[i,j]^k == p[j,i]^k for all triples."""
    for (i, j, k), v in cc.p.items():
        if cc.p.get((j, i, k), 0) != v:
            return False
    return True


def is_association_scheme(cc: CoherentConfig) -> bool:
    """True iff every class is self-converse (all relations symmetric)."""
    return all(cc.converse[i] == i for i in range(cc.rank))


def symmetrize(cc: CoherentConfig) -> CoherentConfig:
    """Merge every class with its converse, re-verify, and renumber
    canonically.  Valencies of merged classes double.  A fixed point for
    association schemes."""
    cc.require_homogeneous("symmetrize")
    if is_association_scheme(cc):
        return cc
    rep = np.array([min(i, cc.converse[i]) for i in range(cc.rank)], dtype=np.int64)
    merged = RelationPartition.from_cell(rep[cc.partition.cell]).canonical()
    return verify_coherence(merged)


def relabel_config(cc: CoherentConfig, perm: Iterable[int]) -> CoherentConfig:
    return verify_coherence(cc.partition.relabel_points(perm))


def weak_components(matrix: np.ndarray) -> list[list[int]]:
    """Weakly connected components of a digraph given by a 0/1 matrix."""
    n = matrix.shape[0]
    sym = ((matrix + matrix.T) > 0).astype(np.int64)
    unseen = set(range(n))
    comps = []
    while unseen:
        start = min(unseen)
        comp = [start]
        unseen.remove(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in np.nonzero(sym[u])[0]:
                w = int(w)
                if w in unseen:
                    unseen.remove(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_bipartite(matrix: np.ndarray) -> bool:
    """2-colorability of the undirected support of a symmetric 0/1 matrix."""
    n = matrix.shape[0]
    color = np.full(n, -1, dtype=np.int64)
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in np.nonzero(matrix[u])[0]:
                w = int(w)
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True
