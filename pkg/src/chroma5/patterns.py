"""Named small graphs, induced-pattern search, and class recognition.

The catalog holds every special graph the coloring case analysis dispatches
on.  ``find_induced`` is a deterministic backtracking search (host candidates
in increasing label order, pattern vertices in degree-descending order, ties
by label), so witnesses are reproducible fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, InputError
from .graph import Graph, bits, mask_of, popcount

_C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]

_CATALOG_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # disjoint union of an edge and a 3-vertex path
    "P2+P3": (5, [(0, 1), (2, 3), (3, 4)]),
    # P4 plus a vertex adjacent to all of it (complement of P1+P4)
    "gem": (5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    # K4 minus one edge (complement of P1+P3)
    "diamond": (4, [(0, 1), (1, 2), (2, 3), (1, 3), (0, 3)]),
    "C5": (5, list(_C5_EDGES)),
    "K3": (3, [(0, 1), (1, 2), (0, 2)]),
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    # C5 plus one vertex with three consecutive cycle neighbors
    "F1": (6, _C5_EDGES + [(5, 4), (5, 0), (5, 1)]),
    # C5 plus adjacent vertices with consecutive-triple neighborhoods at
    # distance 1 on the cycle
    "F1'": (7, _C5_EDGES + [(5, 4), (5, 0), (5, 1), (6, 0), (6, 1), (6, 2), (5, 6)]),
    # C5 plus nonadjacent vertices with consecutive-triple neighborhoods at
    # distance 2 on the cycle
    "F1''": (7, _C5_EDGES + [(5, 4), (5, 0), (5, 1), (6, 1), (6, 2), (6, 3)]),
    # C5 plus an adjacent pair with the same nonconsecutive-triple neighborhood
    "F2": (7, _C5_EDGES + [(5, 3), (5, 0), (5, 2), (6, 3), (6, 0), (6, 2), (5, 6)]),
    # C5 plus a nonconsecutive-triple vertex joined to an edge-pair vertex
    "F3": (7, _C5_EDGES + [(5, 3), (5, 0), (5, 2), (6, 2), (6, 3), (5, 6)]),
}

_CATALOG_CACHE: dict[str, Graph] = {}


def catalog(name: str) -> Graph:
    if name not in _CATALOG_EDGES:
        raise InputError(f"unknown pattern {name!r}; known: {sorted(_CATALOG_EDGES)}")
    if name not in _CATALOG_CACHE:
        n, edges = _CATALOG_EDGES[name]
        _CATALOG_CACHE[name] = Graph.from_edge_list(n, edges)
    return _CATALOG_CACHE[name]


def catalog_names() -> list[str]:
    return sorted(_CATALOG_EDGES)


MAX_PATTERN_VERTICES = 8


def find_induced(pattern: Graph, host: Graph) -> tuple[int, ...] | None:
    """First induced embedding under the deterministic search order.

    Returns a tuple indexed by pattern vertex (entry p = host image of p),
    or None if the pattern does not occur.
    """
    pn = pattern.n
    if pn > MAX_PATTERN_VERTICES:
        raise CapabilityError(f"pattern on {pn} vertices exceeds limit {MAX_PATTERN_VERTICES}")
    if pn == 0:
        return ()
    if pn > host.n:
        return None

    order = sorted(range(pn), key=lambda p: (-popcount(pattern.adj[p]), p))
    # induced embeddings preserve pattern degrees as lower bounds on host degrees
    host_deg = [host.degree(v) for v in range(host.n)]
    deg_ok = []
    for p in range(pn):
        need = popcount(pattern.adj[p])
        deg_ok.append(mask_of(v for v in range(host.n) if host_deg[v] >= need))

    assign = [-1] * pn

    def extend(idx: int, used: int) -> bool:
        if idx == pn:
            return True
        p = order[idx]
        cand = deg_ok[p] & ~used
        for j in range(idx):
            q = order[j]
            h = assign[q]
            if pattern.adj[p] >> q & 1:
                cand &= host.adj[h]
            else:
                cand &= ~host.adj[h]
            if not cand:
                return False
        for h in bits(cand):
            assign[p] = h
            if extend(idx + 1, used | (1 << h)):
                return True
        assign[p] = -1
        return False

    if extend(0, 0):
        return tuple(assign)
    return None


def contains_induced(pattern: Graph, host: Graph) -> bool:
    return find_induced(pattern, host) is not None


def _find_induced_p3(host: Graph, mask: int) -> tuple[int, int, int] | None:
    """Induced path a-b-c inside mask, or None if every component is a clique."""
    for b in bits(mask):
        nb = host.adj[b] & mask
        if popcount(nb) < 2:
            continue
        for a in bits(nb):
            miss = nb & ~host.adj[a] & ~(1 << a)
            if miss:
                return (a, b, next(bits(miss)))
    return None


def find_induced_p4(host: Graph, mask: int) -> tuple[int, int, int, int] | None:
    """Induced path a-b-c-d inside mask (scan order deterministic)."""
    for b in bits(mask):
        for a in bits(host.adj[b] & mask):
            cs = host.adj[b] & mask & ~host.adj[a] & ~(1 << a)
            for c in bits(cs):
                ds = host.adj[c] & mask & ~host.adj[a] & ~host.adj[b]
                ds &= ~(1 << a) & ~(1 << b)
                if ds:
                    return (a, b, c, next(bits(ds)))
    return None


def is_p3_free(host: Graph, mask: int) -> bool:
    return _find_induced_p3(host, mask) is None


def is_p4_free(host: Graph, mask: int) -> bool:
    """Cograph test by complement/component decomposition (iterative)."""
    stack = [mask]
    while stack:
        cur = stack.pop()
        if popcount(cur) <= 3:
            # P4 needs 4 vertices; any graph on <=3 vertices qualifies
            continue
        comps = host.components(cur)
        if len(comps) > 1:
            stack.extend(comps)
            continue
        cocomps = _co_components(host, cur)
        if len(cocomps) == 1:
            return False
        stack.extend(cocomps)
    return True


def _co_components(host: Graph, mask: int) -> list[int]:
    """Components of the complement of G[mask], as masks."""
    rest = mask
    out = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= mask & ~host.adj[v] & ~(1 << v)
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        rest &= ~comp
    return out


@dataclass(frozen=True)
class ClassWitness:
    pattern: str
    embedding: tuple[int, ...]


def _p2p3_occurs(g: Graph) -> bool:
    full = g.full_mask
    for u in range(g.n):
        for off in bits(g.adj[u] >> (u + 1)):
            v = u + 1 + off
            rest = full & ~g.adj[u] & ~g.adj[v] & ~(1 << u) & ~(1 << v)
            if _find_induced_p3(g, rest) is not None:
                return True
    return False


def _gem_occurs(g: Graph) -> bool:
    return any(not is_p4_free(g, g.adj[v]) for v in range(g.n))


def verify_class(g: Graph) -> ClassWitness | None:
    """None iff g is (P2+P3, gem)-free; otherwise one canonical witness.

    Membership is decided by the polynomial characterizations (an edge whose
    common non-neighborhood contains a P3; a vertex whose neighborhood
    contains a P4); the witness embedding is then recovered with the
    deterministic pattern search.
    """
    if _p2p3_occurs(g):
        emb = find_induced(catalog("P2+P3"), g)
        assert emb is not None
        return ClassWitness("P2+P3", emb)
    if _gem_occurs(g):
        emb = find_induced(catalog("gem"), g)
        assert emb is not None
        return ClassWitness("gem", emb)
    return None


def class_c_decomposition(g: Graph) -> tuple[int, list[int]] | None:
    """Isolated-vertex mask plus the five blob masks of a C5 blowup, in the
    canonical cyclic order, or None if g lacks that structure.

    Canonical order: start from the closed-twin class containing the
    smallest non-isolated vertex, orientation chosen to make the weight
    sequence lexicographically least (ties broken toward the smaller-label
    neighbor class).
    """
    isolated = mask_of(v for v in range(g.n) if g.adj[v] == 0)
    rest = g.full_mask & ~isolated
    if rest == 0:
        return None
    classes: dict[int, int] = {}
    for v in bits(rest):
        key = g.closed_neighborhood(v)
        classes[key] = classes.get(key, 0) | (1 << v)
    if len(classes) != 5:
        return None
    blobs = sorted(classes.values(), key=lambda m: m & -m)
    for blob in blobs:
        if not g.is_clique(blob):
            return None
    reps = [next(bits(blob)) for blob in blobs]
    nbr = []
    for i in range(5):
        row = [j for j in range(5) if j != i and g.has_edge(reps[i], reps[j])]
        if len(row) != 2:
            return None
        nbr.append(row)
    # walk the quotient from the class holding the least vertex label, in
    # both orientations; it must close into a single 5-cycle
    orders = []
    for second in nbr[0]:
        seq = [0, second]
        while len(seq) < 5:
            prev, cur = seq[-2], seq[-1]
            nxt = [j for j in nbr[cur] if j != prev]
            if len(nxt) != 1:
                return None
            seq.append(nxt[0])
        if len(set(seq)) == 5 and g.has_edge(reps[seq[-1]], reps[seq[0]]):
            orders.append(tuple(seq))
    if not orders:
        return None
    best = min(orders, key=lambda seq: (tuple(popcount(blobs[j]) for j in seq), seq))
    return isolated, [blobs[j] for j in best]


def recognize_class_C(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """(isolated count, blob weights in canonical cyclic order), or None."""
    decomp = class_c_decomposition(g)
    if decomp is None:
        return None
    iso_mask, blobs = decomp
    return popcount(iso_mask), tuple(popcount(b) for b in blobs)
