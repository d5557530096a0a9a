"""Decomposition of a class member around a fixed induced C5.

Every vertex outside the cycle C = (c_0, ..., c_4) is classified by its
neighborhood trace on C (positions are 0-based, arithmetic mod 5):

* A[i]: trace {i}                  * B[i]: trace {i, i+1}
* X[i]: trace {i-1, i+1}           * Y[i]: trace {i-1, i, i+1}
* Z[i]: trace {i-2, i, i+2}        * T:    empty trace

A trace of size 4 or more forces a gem, so members never produce one.
``check_structural_lemmas`` re-verifies the whole structure theory on a
given partition and reports concrete violating tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClassViolationError, InputError
from .graph import Graph, bits, mask_of, popcount
from .patterns import (
    _find_induced_p3,
    catalog,
    find_induced,
    find_induced_p4,
    is_p3_free,
    is_p4_free,
)


@dataclass(frozen=True)
class C5Partition:
    c: tuple[int, int, int, int, int]
    a: tuple[int, int, int, int, int]
    b: tuple[int, int, int, int, int]
    x: tuple[int, int, int, int, int]
    y: tuple[int, int, int, int, int]
    z: tuple[int, int, int, int, int]
    t: int

    @property
    def w(self) -> frozenset[int]:
        """Positions with nonempty Y."""
        return frozenset(i for i in range(5) if self.y[i])

    def c_mask(self) -> int:
        return mask_of(self.c)

    def union(self, *groups: str) -> int:
        """Union of whole families by letter, e.g. union('a', 'z')."""
        m = 0
        for gname in groups:
            if gname == "t":
                m |= self.t
            else:
                m |= mask_of_family(getattr(self, gname))
        return m

    def outside(self) -> int:
        return self.union("a", "b", "x", "y", "z", "t")


def mask_of_family(fam: tuple[int, ...]) -> int:
    m = 0
    for part in fam:
        m |= part
    return m


def _classify_trace(positions: tuple[int, ...]) -> tuple[str, int] | None:
    """Family letter and index for a trace given as sorted C-positions."""
    k = len(positions)
    if k == 0:
        return ("t", 0)
    if k == 1:
        return ("a", positions[0])
    pset = set(positions)
    if k == 2:
        p, q = positions
        if (p + 1) % 5 == q:
            return ("b", p)
        if (q + 1) % 5 == p:
            return ("b", q)
        # distance-2 pair: the center is the position between them
        for c in range(5):
            if {(c - 1) % 5, (c + 1) % 5} == pset:
                return ("x", c)
        return None
    if k == 3:
        for c in positions:
            if {(c - 1) % 5, c, (c + 1) % 5} == pset:
                return ("y", c)
        for c in positions:
            if {(c - 2) % 5, c, (c + 2) % 5} == pset:
                return ("z", c)
        return None
    return None


def is_induced_c5(g: Graph, c: tuple[int, ...]) -> bool:
    if len(c) != 5 or len(set(c)) != 5:
        return False
    for i in range(5):
        for j in range(i + 1, 5):
            want = (j - i) % 5 in (1, 4)
            if g.has_edge(c[i], c[j]) != want:
                return False
    return True


def partition_around_c5(g: Graph, c: tuple[int, ...]) -> C5Partition:
    if not is_induced_c5(g, c):
        raise InputError(f"vertices {c} do not induce a C5 in cyclic order")
    pos_of = {v: i for i, v in enumerate(c)}
    cmask = mask_of(c)
    fams = {letter: [0] * 5 for letter in "abxyz"}
    t = 0
    for v in range(g.n):
        if (1 << v) & cmask:
            continue
        trace = tuple(sorted(pos_of[u] for u in bits(g.adj[v] & cmask)))
        if len(trace) >= 4:
            # four consecutive cycle neighbors plus v form a gem
            pset = set(trace)
            start = next(i for i in range(5) if all((i + d) % 5 in pset for d in range(4)))
            path = tuple(c[(start + d) % 5] for d in range(4))
            raise ClassViolationError("gem", (*path, v))
        hit = _classify_trace(trace)
        if hit is None:
            raise AssertionError(f"unclassified trace {trace} for vertex {v}")
        letter, idx = hit
        if letter == "t":
            t |= 1 << v
        else:
            fams[letter][idx] |= 1 << v
    return C5Partition(
        c=tuple(c),
        a=tuple(fams["a"]),
        b=tuple(fams["b"]),
        x=tuple(fams["x"]),
        y=tuple(fams["y"]),
        z=tuple(fams["z"]),
        t=t,
    )


def relabel_partition(g: Graph, p: C5Partition, new_order: tuple[int, ...]) -> C5Partition:
    """Re-run the partition with positions permuted: new position j holds the
    old position new_order[j].  Used for the proofs' "up to symmetry" steps."""
    new_c = tuple(p.c[j] for j in new_order)
    return partition_around_c5(g, new_c)


def pick_c5(g: Graph) -> tuple[int, int, int, int, int] | None:
    """Deterministic C5 choice: first embedding under the pattern search."""
    emb = find_induced(catalog("C5"), g)
    return emb if emb is None else tuple(emb)


# -- lemma checking ----------------------------------------------------------

LemmaReport = list[tuple[str, tuple[int, ...]]]


def _viol_edges(g: Graph, m1: int, m2: int) -> list[tuple[int, int]]:
    out = []
    for v in bits(m1):
        for u in bits(g.adj[v] & m2):
            out.append((min(u, v), max(u, v)))
    return sorted(set(out))


def _viol_nonedges(g: Graph, m1: int, m2: int) -> list[tuple[int, int]]:
    out = []
    for v in bits(m1):
        for u in bits(m2 & ~g.adj[v] & ~(1 << v)):
            out.append((min(u, v), max(u, v)))
    return sorted(set(out))


def _stable_violations(g: Graph, m: int) -> list[tuple[int, int]]:
    out = []
    for v in bits(m):
        for u in bits(g.adj[v] & m):
            if u > v:
                out.append((v, u))
    return out


def check_structural_lemmas(g: Graph, p: C5Partition, f1_free: bool | None = None) -> LemmaReport:
    """Empty report iff the whole structure theory holds for this partition.

    Assumes g is a class member (checks are vacuous otherwise).  The three
    extra stable/emptiness facts that require F1-freeness are checked only
    when no induced F1 exists; pass ``f1_free`` to skip that search.
    """
    a, b, x, y, z, t = p.a, p.b, p.x, p.y, p.z, p.t
    report: LemmaReport = []

    def add(lemma: str, tuples) -> None:
        for tup in tuples:
            report.append((lemma, tuple(tup)))

    amask = mask_of_family(a)
    zmask = mask_of_family(z)
    for i in range(5):
        i1, i2, i3, i4 = (i + 1) % 5, (i + 2) % 5, (i + 3) % 5, (i + 4) % 5
        # O1: one-side attachments at distance never mix with the v_i side
        add("O1", _viol_edges(g, a[i1] | a[i4] | x[i], a[i] | b[i] | b[i4] | y[i]))
        # O2: far A-vertices see the whole v_i side
        add("O2", _viol_nonedges(g, a[i2] | a[i3], a[i] | b[i4] | b[i] | y[i]))
        # O3: stable set
        add("O3", _stable_violations(g, a[i] | a[i1] | b[i] | t))
        # O4: B_i forces almost all of A and the adjacent B's empty
        if b[i] and (amask & ~a[i3]) | b[i1] | b[i4]:
            add(
                "O4",
                [
                    (
                        next(bits(b[i])),
                        next(bits((amask & ~a[i3]) | b[i1] | b[i4])),
                    )
                ],
            )
        # M1: Y_i excludes the far B's and X's
        if y[i] and b[i1] | b[i3] | x[i2] | x[i3]:
            add("M1", [(next(bits(y[i])), next(bits(b[i1] | b[i3] | x[i2] | x[i3])))])
        # M2: Z_i excludes the far B's and the adjacent Y's
        if z[i] and b[i1] | b[i3] | y[i1] | y[i4]:
            add("M2", [(next(bits(z[i])), next(bits(b[i1] | b[i3] | y[i1] | y[i4])))])
        # M3: Y_i is a clique, complete to listed families
        if y[i]:
            add("M3", (tup for tup in _viol_nonedges(g, y[i], y[i]) if tup[0] != tup[1]))
            add("M3", _viol_nonedges(g, y[i], y[i1] | a[i] | b[i] | b[i4] | z[i2] | z[i3]))
        # M4: Y_i anticomplete to far Y's and T
        add("M4", _viol_edges(g, y[i], y[i2] | y[i3] | t))
        # M5: adjacent nonempty Y's force A_{i-2} empty
        if y[i] and y[i1] and a[i3]:
            add("M5", [(next(bits(y[i])), next(bits(y[i1])), next(bits(a[i3])))])
        # M6: Z_i anticomplete to other Z's and adjacent X's; a nonempty
        # Z-neighbor forces Z_i stable
        add("M6", _viol_edges(g, z[i], (zmask & ~z[i]) | x[i1] | x[i4]))
        if z[i] and z[i1]:
            add("M6", _stable_violations(g, z[i] | z[i1]))
        # M7: big components of Z_i, X_{i+1}, X_{i-1} are complete to Y_i
        if y[i]:
            for src in (z[i], x[i1], x[i4]):
                for comp in g.components(src):
                    if popcount(comp) >= 2:
                        add("M7", _viol_nonedges(g, comp, y[i]))
        # M8: big components of X_i are complete to the far Z's
        if z[i2] | z[i3]:
            for comp in g.components(x[i]):
                if popcount(comp) >= 2:
                    add("M8", _viol_nonedges(g, comp, z[i2] | z[i3]))
        # L1: X_i induces disjoint cliques
        if not is_p3_free(g, x[i]):
            add("L1", [_find_induced_p3(g, x[i])])
        # L3: Z_i induces a cograph
        if not is_p4_free(g, z[i]):
            add("L3", [find_induced_p4(g, z[i])])

    if f1_free is None:
        f1_free = find_induced(catalog("F1"), g) is None
    if f1_free:
        ymask = mask_of_family(y)
        if ymask:
            add("F3claim-i", [(next(bits(ymask)),)])
        for i in range(5):
            i1, i3 = (i + 1) % 5, (i + 3) % 5
            add("F3claim-ii", _stable_violations(g, x[i]))
            if x[i] and b[i3] | b[i1]:
                add("F3claim-iii", [(next(bits(x[i])), next(bits(b[i3] | b[i1])))])

    return sorted(set(report))
