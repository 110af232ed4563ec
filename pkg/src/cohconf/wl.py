"""Weisfeiler-Leman refinement: the coherent closure of a pair coloring.

One refinement round recolors every ordered pair (alpha, beta) by the
multiset, over gamma, of the color pairs (c(alpha, gamma), c(gamma, beta)),
together with the pair's own current color.  Rounds iterate to a fixed point;
the color count strictly increases until then, so at most n^2 rounds run.
The stable partition is the coarsest coherent refinement of the input with
the diagonal separated, and it passes :func:`cohconf.core.verify_coherence`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import CoherentConfig, Graph, RelationPartition, verify_coherence


@dataclass(frozen=True)
class PairColoring:
    """Total coloring of Omega x Omega by arbitrary integers.

    Unlike RelationPartition, colors need not be contiguous and the diagonal
    need not be separated (wl_closure separates it up front).
    """

    n: int
    color: np.ndarray

    def __post_init__(self):
        c = np.ascontiguousarray(self.color, dtype=np.int64)
        if c.shape != (self.n, self.n):
            raise ValueError("color shape does not match n")
        object.__setattr__(self, "color", c)

    def to_partition(self) -> RelationPartition:
        return RelationPartition.from_cell(self.color)

    def relabel_points(self, perm) -> "PairColoring":
        p = np.asarray(list(perm), dtype=np.int64)
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        return PairColoring(self.n, self.color[np.ix_(inv, inv)])


def from_graph(g: Graph) -> PairColoring:
    """3-coloring of pairs: 0 diagonal, 1 edges, 2 non-edges (colors for
    absent pair types simply do not occur)."""
    color = np.where(g.adjacency > 0, 1, 2).astype(np.int64)
    np.fill_diagonal(color, 0)
    return PairColoring(g.n, color)


def _initial_codes(coloring: PairColoring) -> tuple[np.ndarray, int]:
    """Densify input colors with the diagonal split enforced, numbering by
    first occurrence so both kernel backends agree exactly."""
    n = coloring.n
    raw = coloring.color
    keyed = raw * 2 + np.eye(n, dtype=np.int64)  # diagonal split
    part = RelationPartition.from_cell(keyed)
    return part.cell, part.r


def wl_refinement(coloring: PairColoring) -> RelationPartition:
    """Iterate refinement rounds to the stable partition (not yet verified)."""
    codes, ncolors = _initial_codes(coloring)
    while True:
        ids, count = _kernels.signature_ids(codes, ncolors)
        if count == ncolors:
            return RelationPartition(coloring.n, ncolors, codes)
        codes, ncolors = ids, count


def wl_closure(coloring: PairColoring) -> CoherentConfig:
    """Coherent closure of an arbitrary pair coloring.

    The output refines the input (pairs with distinct input colors never
    share an output class), separates the diagonal, and is returned with
    canonical class numbering, verified.
    """
    stable = wl_refinement(coloring).canonical()
    return verify_coherence(stable)


def closure_of_graph(g: Graph) -> CoherentConfig:
    return wl_closure(from_graph(g))


def refines(finer: RelationPartition, coarser: PairColoring | RelationPartition) -> bool:
    """True if every class of ``finer`` lies inside one color of ``coarser``."""
    coarse = coarser.color if isinstance(coarser, PairColoring) else coarser.cell
    fine = finer.cell
    seen: dict[int, int] = {}
    for a, b in zip(fine.ravel().tolist(), coarse.ravel().tolist()):
        if a in seen:
            if seen[a] != b:
                return False
        else:
            seen[a] = b
    return True
