"""Generators for the named graphs and extremal families, plus randomized
class-member generation for the property suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import CapabilityError, InputError
from .graph import Graph, bits, mask_of
from .patterns import catalog, verify_class
from .subcolor import BlowupSpec, expand_blowup


def table1(k: int) -> BlowupSpec:
    """Extremal C5 blowup with clique number exactly k (k >= 4)."""
    if k < 4:
        raise InputError(f"extremal family starts at clique number 4, got {k}")
    t, r = divmod(k, 4)
    if r == 0:
        weights = (2 * t,) * 5
    elif r == 1:
        weights = (2 * t + 1, 2 * t, 2 * t + 1, 2 * t, 2 * t)
    elif r == 2:
        weights = (2 * t + 1,) * 5
    else:
        weights = (2 * t + 2, 2 * t + 1, 2 * t + 2, 2 * t + 1, 2 * t + 1)
    return BlowupSpec(catalog("C5"), weights)


def table1_declared_chi(k: int) -> int:
    """Chromatic number the extremal family is built to achieve."""
    if k < 4:
        raise InputError(f"extremal family starts at clique number 4, got {k}")
    t, r = divmod(k, 4)
    return 5 * t + {0: 0, 1: 1, 2: 3, 3: 4}[r]


def mycielskian(g: Graph) -> Graph:
    """Shadow each vertex against the original neighborhoods, add an apex
    adjacent to all shadows; raises chromatic number by one, keeps
    triangle-freeness."""
    if g.n < 1:
        raise InputError("mycielskian needs at least one vertex")
    n = g.n
    edges = list(g.edges())
    for u in range(n):
        for v in bits(g.adj[u]):
            edges.append((n + u, v))
    apex = 2 * n
    edges.extend((apex, n + u) for u in range(n))
    return Graph.from_edge_list(2 * n + 1, edges)


def grotzsch() -> Graph:
    return mycielskian(catalog("C5"))


def co_schlafli() -> Graph:
    """Complement of the 16-regular Schlafli graph, built from the 27-lines
    labels a_1..a_6, b_1..b_6, c_ij (i<j); verified srg(27, 10, 1, 5)."""
    a = {i: i for i in range(6)}
    b = {i: 6 + i for i in range(6)}
    c = {}
    nxt = 12
    for i in range(6):
        for j in range(i + 1, 6):
            c[(i, j)] = nxt
            nxt += 1
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j and a[i] < b[j]:
                edges.append((a[i], b[j]))
    for (i, j), cv in c.items():
        for k in range(6):
            if k in (i, j):
                edges.append((a[k], cv))
                edges.append((b[k], cv))
    for (i, j), cv in c.items():
        for (k, l), cw in c.items():
            if cv < cw and not ({i, j} & {k, l}):
                edges.append((cv, cw))
    g = Graph.from_edge_list(27, edges)
    _check_srg(g, 27, 10, 1, 5)
    return g


def _check_srg(g: Graph, n: int, k: int, lam: int, mu: int) -> None:
    if g.n != n:
        raise AssertionError(f"srg self-check: expected {n} vertices, got {g.n}")
    for v in range(n):
        if g.degree(v) != k:
            raise AssertionError(f"srg self-check: vertex {v} has degree {g.degree(v)} != {k}")
    for u in range(n):
        for v in range(u + 1, n):
            common = bin(g.adj[u] & g.adj[v]).count("1")
            want = lam if g.has_edge(u, v) else mu
            if common != want:
                raise AssertionError(
                    f"srg self-check: pair ({u},{v}) has {common} common neighbors, want {want}"
                )


def g_star() -> Graph:
    """Six-vertex base: a 5-cycle u1..u5 plus a pendant attached to u2."""
    return Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1)])


def g_star_H(t: int) -> Graph:
    """Blowup of the pendant-C5 base witnessing optimal graphs outside the
    blowup class at clique numbers 4 and 5."""
    if t not in (3, 4):
        raise InputError(f"t must be 3 or 4, got {t}")
    spec = BlowupSpec(g_star(), (t - 1, 1, t - 1, 1, 1, 1))
    expansion, _ = expand_blowup(spec)
    return expansion


@dataclass(frozen=True)
class MemberSample:
    """A generated class member, with its provenance recorded."""

    graph: Graph
    generator: str
    seed: int
    params: tuple = field(default_factory=tuple)


_STRATEGIES = ("blowup", "induced", "gstar", "perturbed")


def random_member(
    seed: int,
    max_n: int = 120,
    strategy: str | None = None,
    max_weight: int = 5,
) -> MemberSample:
    """A verified (P2+P3, gem)-free graph from one of four strategies.

    Deterministic in (seed, parameters); rejection sampling is budgeted and
    fails with CapabilityError rather than returning a non-member.
    """
    rng = random.Random(("chroma5", seed))
    strat = strategy or rng.choice(_STRATEGIES)
    if strat not in _STRATEGIES:
        raise InputError(f"unknown strategy {strat!r}; known: {_STRATEGIES}")
    for attempt in range(64):
        g, params = _generate(rng, strat, max_n, max_weight)
        if verify_class(g) is None:
            return MemberSample(g, strat, seed, params)
    raise CapabilityError(f"rejection budget exhausted for strategy {strat!r} seed {seed}")


def _random_blowup(rng: random.Random, max_n: int, max_weight: int) -> tuple[Graph, tuple]:
    while True:
        weights = tuple(rng.randint(1, max_weight) for _ in range(5))
        ell = rng.randint(0, 3)
        if sum(weights) + ell <= max_n:
            break
    spec = BlowupSpec(catalog("C5"), weights, ell)
    g, _ = expand_blowup(spec)
    return g, (weights, ell)


def _generate(rng: random.Random, strat: str, max_n: int, max_weight: int) -> tuple[Graph, tuple]:
    if strat == "blowup":
        return _random_blowup(rng, max_n, max_weight)

    if strat == "induced":
        base_kind = rng.choice(("blowup", "co_schlafli", "grotzsch"))
        if base_kind == "blowup":
            base, params = _random_blowup(rng, max_n * 2, max_weight)
        elif base_kind == "co_schlafli":
            base, params = co_schlafli(), ()
        else:
            base, params = grotzsch(), ()
        keep = mask_of(v for v in range(base.n) if rng.random() < 0.75)
        if not keep:
            keep = 1
        sub, _ = base.induced(keep)
        return sub, (base_kind, *params)

    if strat == "gstar":
        w1 = rng.randint(1, max_weight)
        w3 = rng.randint(1, max_weight)
        w2 = rng.randint(1, 2)
        spec = BlowupSpec(g_star(), (w1, w2, w3, 1, 1, 1), rng.randint(0, 2))
        g, _ = expand_blowup(spec)
        return g, ((w1, w2, w3, 1, 1, 1),)

    # perturbed: a blowup with a few extra vertices attached to random blobs
    base, params = _random_blowup(rng, max_n - 4, max_weight)
    spec_weights, ell = params
    blob_count = 5
    extra = rng.randint(1, 3)
    blob_starts = list(itertools.accumulate((0,) + spec_weights[:-1]))
    edges = list(base.edges())
    n = base.n
    for _ in range(extra):
        v = n
        n += 1
        picks = rng.sample(range(blob_count), rng.randint(1, 3))
        for bidx in picks:
            lo = blob_starts[bidx]
            for u in range(lo, lo + spec_weights[bidx]):
                if rng.random() < 0.9:
                    edges.append((v, u))
    return Graph.from_edge_list(n, edges), (spec_weights, ell, extra)
