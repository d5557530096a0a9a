"""Immutable simple undirected graphs over dense 0-based vertex labels.

Adjacency rows are Python ints used as bit arrays: bit u of ``adj[v]`` is set
iff uv is an edge.  Vertex sets throughout the package are plain int masks,
which keeps adjacency tests and set algebra at O(n/word).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError

MAX_VERTICES = 512


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Vertices of a mask in increasing label order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Immutable graph; ``adj[v]`` is the open neighborhood of v as a mask."""

    __slots__ = ("n", "adj", "full_mask", "_edge_count")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj
        self.full_mask = (1 << n) - 1
        self._edge_count = sum(popcount(row) for row in adj) // 2

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0 or n > MAX_VERTICES:
            raise InputError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise InputError(f"self-loop rejected: ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- queries -----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for off in bits(higher):
                yield (u, u + 1 + off)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self.adj[v]:
                return False
        return True

    def first_edge_in(self, mask: int) -> tuple[int, int] | None:
        for v in bits(mask):
            hit = mask & self.adj[v]
            if hit:
                u = next(bits(hit))
                return (min(u, v), max(u, v))
        return None

    def first_edge_between(self, m1: int, m2: int) -> tuple[int, int] | None:
        for v in bits(m1):
            hit = m2 & self.adj[v]
            if hit:
                return (v, next(bits(hit)))
        return None

    def is_anticomplete(self, m1: int, m2: int) -> bool:
        """No edge with one end in m1 and the other in m2 (disjoint sets)."""
        for v in bits(m1):
            if self.adj[v] & m2:
                return False
        return True

    def first_nonedge_between(self, m1: int, m2: int) -> tuple[int, int] | None:
        for v in bits(m1):
            miss = m2 & ~self.adj[v] & ~(1 << v)
            if miss:
                return (v, next(bits(miss)))
        return None

    def is_complete_between(self, m1: int, m2: int) -> bool:
        return self.first_nonedge_between(m1, m2) is None

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of G[mask] as masks, ordered by least vertex."""
        rest = self.full_mask if mask is None else mask
        out = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                grow &= rest & ~comp
                comp |= grow
                frontier = grow
            out.append(comp)
            rest &= ~comp
        return out

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = tuple((full & ~self.adj[v]) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, rows)

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Subgraph induced by mask, relabeled 0..|mask|-1; returns the label map
        (new label -> old vertex)."""
        if mask & ~self.full_mask:
            raise InputError("vertex set outside graph range")
        verts = list(bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            hit = self.adj[v] & mask
            for u in bits(hit):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(verts), tuple(rows)), verts

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class Coloring:
    """Proper-coloring candidate: colors[v] in 0..num_colors-1."""

    colors: tuple[int, ...]
    num_colors: int

    def color_classes(self) -> list[int]:
        classes = [0] * self.num_colors
        for v, c in enumerate(self.colors):
            classes[c] |= 1 << v
        return classes


def normalize_coloring(assign: dict[int, int], n: int) -> Coloring:
    """Full-graph coloring from a vertex->color map, palette remapped densely."""
    if len(assign) != n:
        missing = [v for v in range(n) if v not in assign]
        raise InputError(f"coloring does not cover all vertices, missing {missing[:5]}")
    used = sorted(set(assign.values()))
    remap = {c: i for i, c in enumerate(used)}
    return Coloring(tuple(remap[assign[v]] for v in range(n)), len(used))


def is_proper(g: Graph, coloring: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """True iff no monochromatic edge; on failure returns a witness edge."""
    if len(coloring.colors) != g.n:
        raise InputError("coloring length does not match vertex count")
    seen = [0] * max(coloring.num_colors, 1)
    for c in coloring.colors:
        if not (0 <= c < coloring.num_colors):
            raise InputError(f"color {c} outside palette 0..{coloring.num_colors - 1}")
        seen[c] = 1
    if coloring.num_colors and not all(seen):
        raise InputError("palette has an unused color; colorings must be dense")
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1)):
            w = u + 1 + v
            if coloring.colors[u] == coloring.colors[w]:
                return False, (u, w)
    return True, None
