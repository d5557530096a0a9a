"""Reusable coloring primitives the case analysis composes.

Stable sets, bipartite pieces, P3-free pieces (disjoint cliques), P4-free
pieces (cographs), and optimal multicoloring of clique blowups of C5.
Preconditions are always executed, never trusted: each primitive verifies its
structural assumption and fails with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import InputError, PreconditionError, ProofViolationError
from .graph import Coloring, Graph, bits, mask_of, normalize_coloring, popcount
from .patterns import (
    _co_components,
    _find_induced_p3,
    catalog,
    find_induced_p4,
    is_p4_free,
)


@dataclass(frozen=True)
class BlowupSpec:
    """Base graph, per-vertex clique sizes, and a count of extra isolated
    vertices appended after the expansion."""

    base: Graph
    weights: tuple[int, ...]
    isolated: int = 0

    def __post_init__(self):
        if len(self.weights) != self.base.n:
            raise InputError("one weight per base vertex required")
        if any(w < 1 for w in self.weights):
            raise InputError(f"blowup weights must be positive: {self.weights}")
        if self.isolated < 0:
            raise InputError("isolated vertex count must be nonnegative")


def expand_blowup(spec: BlowupSpec) -> tuple[Graph, list[list[int]]]:
    """Expansion graph plus the blob map (base vertex -> expansion vertices).

    Blobs are laid out in base-vertex order; isolated vertices come last.
    """
    blobs: list[list[int]] = []
    nxt = 0
    for w in spec.weights:
        blobs.append(list(range(nxt, nxt + w)))
        nxt += w
    total = nxt + spec.isolated
    edges = []
    for i in range(spec.base.n):
        for a in blobs[i]:
            for b in blobs[i]:
                if a < b:
                    edges.append((a, b))
        for j in bits(spec.base.adj[i]):
            if j > i:
                for a in blobs[i]:
                    for b in blobs[j]:
                        edges.append((a, b))
    return Graph.from_edge_list(total, edges), blobs


@dataclass(frozen=True)
class PartialColoring:
    """Coloring of an induced piece, keyed by host vertex; palette dense."""

    assign: dict[int, int]
    num_colors: int

    def support(self) -> int:
        return mask_of(self.assign)


EMPTY_PIECE = PartialColoring({}, 0)


def color_stable(g: Graph, mask: int) -> PartialColoring:
    """One color; the set must be stable."""
    if not mask:
        return EMPTY_PIECE
    edge = g.first_edge_in(mask)
    if edge is not None:
        raise PreconditionError("set is not stable", edge)
    return PartialColoring({v: 0 for v in bits(mask)}, 1)


def color_bipartite(g: Graph, mask: int) -> PartialColoring:
    """BFS 2-coloring; fails with an odd-cycle edge witness."""
    if not mask:
        return EMPTY_PIECE
    assign: dict[int, int] = {}
    for comp in g.components(mask):
        root = next(bits(comp))
        assign[root] = 0
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for u in bits(g.adj[v] & comp):
                if u not in assign:
                    assign[u] = 1 - assign[v]
                    frontier.append(u)
                elif assign[u] == assign[v]:
                    raise PreconditionError("set is not bipartite", (v, u))
    return PartialColoring(assign, max(assign.values()) + 1)


def color_p3_free(g: Graph, mask: int) -> PartialColoring:
    """Color a disjoint union of cliques with exactly its clique number."""
    if not mask:
        return EMPTY_PIECE
    p3 = _find_induced_p3(g, mask)
    if p3 is not None:
        raise PreconditionError("set is not P3-free", p3)
    assign: dict[int, int] = {}
    k = 0
    for comp in g.components(mask):
        for c, v in enumerate(bits(comp)):
            assign[v] = c
        k = max(k, popcount(comp))
    return PartialColoring(assign, k)


def color_cograph(g: Graph, mask: int) -> PartialColoring:
    """Color a P4-free piece with exactly its clique number.

    Recursive modular decomposition: a nontrivial cograph or its complement
    is disconnected; unions reuse one palette, joins use disjoint palettes.
    """
    if not mask:
        return EMPTY_PIECE
    if not is_p4_free(g, mask):
        raise PreconditionError("set is not P4-free", find_induced_p4(g, mask))

    def rec(m: int) -> tuple[dict[int, int], int]:
        if popcount(m) == 1:
            return {next(bits(m)): 0}, 1
        comps = g.components(m)
        if len(comps) > 1:
            assign: dict[int, int] = {}
            k = 0
            for comp in comps:
                sub, ks = rec(comp)
                assign.update(sub)
                k = max(k, ks)
            return assign, k
        cocomps = _co_components(g, m)
        assign = {}
        offset = 0
        for comp in cocomps:
            sub, ks = rec(comp)
            assign.update({v: c + offset for v, c in sub.items()})
            offset += ks
        return assign, offset

    assign, k = rec(mask)
    return PartialColoring(assign, k)


def merge_anticomplete(g: Graph, p1: PartialColoring, p2: PartialColoring) -> PartialColoring:
    """Reuse one palette across anticomplete parts; max(k1, k2) colors."""
    m1, m2 = p1.support(), p2.support()
    if m1 & m2:
        raise InputError("merge parts overlap")
    for v in bits(m1):
        hit = g.adj[v] & m2
        if hit:
            raise PreconditionError(
                "merge requires anticomplete parts", (v, next(bits(hit)))
            )
    return PartialColoring({**p1.assign, **p2.assign}, max(p1.num_colors, p2.num_colors))


def stack_disjoint(p1: PartialColoring, p2: PartialColoring) -> PartialColoring:
    """Disjoint palettes; k1 + k2 colors."""
    if p1.support() & p2.support():
        raise InputError("stack parts overlap")
    shifted = {v: c + p1.num_colors for v, c in p2.assign.items()}
    return PartialColoring({**p1.assign, **shifted}, p1.num_colors + p2.num_colors)


# -- clique blowups of C5 ---------------------------------------------------


def c5_blowup_chromatic(weights) -> int:
    """Chromatic number of C5<K_w1,...,K_w5>: the larger of the heaviest
    adjacent pair and half the total weight, rounded up.

    Validated against the exact oracle over all weight tuples in {1..4}^5
    (see the acceptance suite) rather than assumed.
    """
    w = tuple(weights)
    if len(w) != 5 or any(t < 1 for t in w):
        raise InputError(f"need 5 positive weights, got {w}")
    pair = max(w[i] + w[(i + 1) % 5] for i in range(5))
    return max(pair, ceil(sum(w) / 2))


def _greedy_arcs(w: tuple[int, ...], n_colors: int) -> list[list[int]] | None:
    """Contiguous cyclic arcs laid end to end; None if adjacent arcs collide."""
    arcs = []
    start = 0
    for t in w:
        arcs.append([(start + i) % n_colors for i in range(t)])
        start += t
    for i in range(5):
        if set(arcs[i]) & set(arcs[(i + 1) % 5]):
            return None
    return arcs


def c5_multicolor_classes(weights, oracle=None) -> list[list[int]]:
    """Color sets S_1..S_5 with |S_i| = w_i, adjacent sets disjoint, drawn
    from exactly c5_blowup_chromatic(weights) colors.

    Fast path: greedy arc placement tried over all ten dihedral relabelings.
    Fallback: exact k-colorability search on the expansion.
    """
    w = tuple(weights)
    n_colors = c5_blowup_chromatic(w)
    perms = [[(s + k) % 5 for k in range(5)] for s in range(5)]
    perms += [[(s - k) % 5 for k in range(5)] for s in range(5)]
    for perm in perms:
        arcs = _greedy_arcs(tuple(w[p] for p in perm), n_colors)
        if arcs is None:
            continue
        classes: list[list[int]] = [[] for _ in range(5)]
        for k in range(5):
            classes[perm[k]] = sorted(arcs[k])
        return classes
    # exhaustive fallback keeps the contract unconditional
    from .oracle import Oracle

    oracle = oracle or Oracle()
    expansion, blobs = expand_blowup(BlowupSpec(catalog("C5"), w))
    col = oracle.is_k_colorable(expansion, n_colors)
    if col is None:
        raise ProofViolationError(
            "c5 blowup chromatic formula overestimated a blowup", w
        )
    return [sorted(col.colors[v] for v in blobs[i]) for i in range(5)]


def _c5_cyclic_order(base: Graph) -> list[int]:
    """Vertices of a 5-cycle in cyclic order starting at 0; rejects non-C5."""
    if base.n != 5 or any(base.degree(v) != 2 for v in range(5)):
        raise PreconditionError("blowup base is not a C5", None)
    order = [0, next(bits(base.adj[0]))]
    while len(order) < 5:
        cand = [v for v in bits(base.adj[order[-1]]) if v not in order]
        if len(cand) != 1:
            raise PreconditionError("blowup base is not a C5", tuple(order))
        order.append(cand[0])
    if not base.has_edge(order[-1], order[0]):
        raise PreconditionError("blowup base is not a C5", tuple(order))
    return order


def color_c5_blowup(spec: BlowupSpec, oracle=None) -> Coloring:
    """Optimal coloring of a C5 blowup expansion; isolated vertices reuse
    color 0."""
    order = _c5_cyclic_order(spec.base)
    cyc_weights = tuple(spec.weights[v] for v in order)
    classes = c5_multicolor_classes(cyc_weights, oracle=oracle)
    expansion, blobs = expand_blowup(spec)
    assign: dict[int, int] = {}
    for k, base_v in enumerate(order):
        for vertex, color in zip(blobs[base_v], classes[k]):
            assign[vertex] = color
    blob_total = sum(spec.weights)
    for v in range(blob_total, blob_total + spec.isolated):
        assign[v] = 0
    coloring = normalize_coloring(assign, expansion.n)
    expected = c5_blowup_chromatic(cyc_weights)
    if coloring.num_colors != expected:
        raise ProofViolationError(
            "c5 blowup coloring missed the declared color count",
            (coloring.num_colors, expected),
        )
    return coloring
