"""Top-level constructive colorer for (P2+P3, gem)-free graphs.

Dispatch: trivial graphs, then recognized C5-blowup members (colored
optimally), then C5-free members (perfect, colored exactly), then the
C5 case analysis: many nonempty Y-sets, else the F1/F1''/F1' chain, else F2,
else F3, else the clique number is forced down to 3 and the small-omega
constructions finish.

Every structural fact a construction relies on is re-checked; a failure
raises ProofViolationError with a minimal witness, so the entire structure
theory doubles as an executable assertion suite.  Every claimed clique is
actually exhibited and verified before the color count is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

from .errors import ClassViolationError, InputError, PreconditionError, ProofViolationError
from .graph import MAX_VERTICES, Coloring, Graph, bits, mask_of, normalize_coloring, is_proper, popcount
from .oracle import Oracle, OracleLimits
from .partition import C5Partition, partition_around_c5, pick_c5, relabel_partition
from .patterns import catalog, class_c_decomposition, find_induced, verify_class
from .subcolor import (
    EMPTY_PIECE,
    PartialColoring,
    c5_blowup_chromatic,
    c5_multicolor_classes,
    color_bipartite,
    color_cograph,
    color_p3_free,
    color_stable,
    merge_anticomplete,
    stack_disjoint,
)

BRANCHES = (
    "trivial",
    "classC-W5",
    "perfect",
    "W4",
    "F1'",
    "F1''",
    "F1",
    "F2",
    "F3",
    "omega3-diamond",
    "omega3-trianglefree-fallback",
    "omega3-diamondfree-fallback",
)


def phi(x: int) -> int:
    """The optimal chromatic bound: 1, 4, 6, then ceil((5x-1)/4)."""
    if x < 1:
        raise InputError(f"clique number must be positive, got {x}")
    if x == 1:
        return 1
    if x == 2:
        return 4
    if x == 3:
        return 6
    return ceil((5 * x - 1) / 4)


@dataclass
class DecompositionRecord:
    """Named bindings a handler used, in re-checkable form."""

    named_sets: dict[str, tuple[int, ...]] = field(default_factory=dict)
    counters: list[tuple[str, tuple[int, ...], int]] = field(default_factory=list)
    cliques: list[tuple[int, ...]] = field(default_factory=list)
    stable_sets: list[tuple[int, ...]] = field(default_factory=list)
    anticomplete_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    relabelings: list[tuple[int, ...]] = field(default_factory=list)


@dataclass
class BranchStep:
    branch: str
    c5: tuple[int, ...] | None = None
    embedding: tuple[int, ...] | None = None
    record: DecompositionRecord | None = None


@dataclass
class BranchTrace:
    steps: list[BranchStep]

    @property
    def final_branch(self) -> str:
        return self.steps[-1].branch if self.steps else "trivial"

    def branches(self) -> list[str]:
        return [s.branch for s in self.steps]


class _Ctx:
    """Per-call state: graph, oracle, cached clique number, trace, record."""

    def __init__(self, g: Graph, oracle: Oracle, omega: int):
        self.g = g
        self.oracle = oracle
        self.omega = omega
        self.steps: list[BranchStep] = []
        self.record = DecompositionRecord()

    # -- verified facts ---------------------------------------------------

    def assert_empty(self, mask: int, what: str) -> None:
        if mask:
            raise ProofViolationError(f"{what} should be empty", tuple(bits(mask)))

    def assert_stable(self, mask: int, what: str) -> None:
        edge = self.g.first_edge_in(mask)
        if edge is not None:
            raise ProofViolationError(f"{what} should be stable", edge)
        self.record.stable_sets.append(tuple(bits(mask)))

    def assert_clique(self, mask: int, what: str) -> None:
        miss = self.g.first_nonedge_between(mask, mask)
        if miss is not None:
            raise ProofViolationError(f"{what} should be a clique", miss)
        self.record.cliques.append(tuple(bits(mask)))

    def assert_anticomplete(self, m1: int, m2: int, what: str) -> None:
        edge = self.g.first_edge_between(m1, m2)
        if edge is not None:
            raise ProofViolationError(f"{what} should be anticomplete", edge)
        self.record.anticomplete_pairs.append((tuple(bits(m1)), tuple(bits(m2))))

    def assert_complete(self, m1: int, m2: int, what: str) -> None:
        miss = self.g.first_nonedge_between(m1, m2)
        if miss is not None:
            raise ProofViolationError(f"{what} should be complete", miss)

    def omega_of(self, mask: int, counter: str | None = None) -> int:
        clique = self.oracle.max_clique_mask(self.g, mask)
        size = popcount(clique)
        if counter is not None:
            self.record.counters.append((counter, tuple(bits(mask)), size))
        return size

    def exhibit_clique(self, region: int, target: int, what: str) -> None:
        """Find and record a clique of the target size inside the region."""
        if target <= 0:
            return
        clique = self.oracle.max_clique_mask(self.g, region)
        if popcount(clique) < target:
            raise ProofViolationError(
                f"{what}: expected a clique of size {target}", tuple(bits(clique))
            )
        if not self.g.is_clique(clique):
            raise AssertionError("internal: exhibited clique failed verification")
        self.record.cliques.append(tuple(bits(clique)))

    def name_set(self, name: str, mask: int) -> None:
        self.record.named_sets[name] = tuple(bits(mask))

    # -- verified pieces ----------------------------------------------------

    def stable_piece(self, mask: int, what: str) -> PartialColoring:
        try:
            piece = color_stable(self.g, mask)
        except PreconditionError as exc:
            raise ProofViolationError(f"{what} should be stable", exc.witness) from exc
        if mask:
            self.record.stable_sets.append(tuple(bits(mask)))
        return piece

    def two_stable_piece(self, m1: int, m2: int, what: str) -> PartialColoring:
        """Two given stable classes on colors 0/1 (cross edges allowed)."""
        p1 = self.stable_piece(m1, f"{what} (first class)")
        p2 = self.stable_piece(m2, f"{what} (second class)")
        if not m1:
            return p2
        if not m2:
            return p1
        return stack_disjoint(p1, p2)

    def cluster_piece(self, mask: int, what: str) -> PartialColoring:
        try:
            return color_p3_free(self.g, mask)
        except PreconditionError as exc:
            raise ProofViolationError(f"{what} should be P3-free", exc.witness) from exc

    def cograph_piece(self, mask: int, what: str) -> PartialColoring:
        try:
            return color_cograph(self.g, mask)
        except PreconditionError as exc:
            raise ProofViolationError(f"{what} should be P4-free", exc.witness) from exc

    def clique_piece(self, mask: int, what: str) -> PartialColoring:
        self.assert_clique(mask, what)
        return PartialColoring({v: i for i, v in enumerate(bits(mask))}, popcount(mask))

    def merge(self, what: str, *pieces: PartialColoring) -> PartialColoring:
        out = EMPTY_PIECE
        for piece in pieces:
            try:
                out = merge_anticomplete(self.g, out, piece)
            except PreconditionError as exc:
                raise ProofViolationError(
                    f"{what}: parts should be anticomplete", exc.witness
                ) from exc
        return out

    def finish(
        self,
        pieces: list[PartialColoring],
        branch: str,
        bound: int,
        c5: tuple[int, ...] | None = None,
        embedding: tuple[int, ...] | None = None,
    ) -> Coloring:
        combined = EMPTY_PIECE
        for piece in pieces:
            combined = stack_disjoint(combined, piece)
        if combined.support() != self.g.full_mask:
            missing = self.g.full_mask & ~combined.support()
            raise ProofViolationError(
                f"{branch}: coloring does not cover all vertices", tuple(bits(missing))
            )
        coloring = normalize_coloring(combined.assign, self.g.n)
        ok, edge = is_proper(self.g, coloring)
        if not ok:
            raise ProofViolationError(f"{branch}: coloring is not proper", edge)
        if coloring.num_colors > bound:
            raise ProofViolationError(
                f"{branch}: used {coloring.num_colors} colors, bound is {bound}", None
            )
        self.steps.append(BranchStep(branch, c5, embedding, self.record))
        self.record = DecompositionRecord()
        return coloring


def color(g: Graph, oracle: Oracle | None = None) -> tuple[Coloring, BranchTrace]:
    """Proper coloring within phi(omega); within omega+1 off the blowup class
    at omega >= 4; exactly chromatic on recognized blowup members."""
    oracle = oracle or Oracle(OracleLimits(max_chi_vertices=MAX_VERTICES))
    witness = verify_class(g)
    if witness is not None:
        raise ClassViolationError(witness.pattern, witness.embedding)

    if g.n == 0:
        return Coloring((), 0), BranchTrace([BranchStep("trivial")])
    if g.edge_count() == 0:
        return (
            Coloring((0,) * g.n, 1),
            BranchTrace([BranchStep("trivial")]),
        )

    decomp = class_c_decomposition(g)
    if decomp is not None:
        return _color_class_c(g, oracle, decomp)

    omega, _ = oracle.clique_number(g)
    ctx = _Ctx(g, oracle, omega)

    c5 = pick_c5(g)
    if c5 is None:
        # no C5 and no long holes/antiholes (they contain P2+P3 or gem), so
        # the graph is perfect: an exact clique-number coloring must exist
        col = oracle.is_k_colorable(g, omega)
        if col is None:
            raise ProofViolationError("C5-free member should be perfect", None)
        ctx.steps.append(BranchStep("perfect"))
        return col, BranchTrace(ctx.steps)

    part = partition_around_c5(g, c5)
    if len(part.w) in (4, 5):
        coloring = _handle_w(ctx, part)
        return coloring, BranchTrace(ctx.steps)

    emb = find_induced(catalog("F1"), g)
    if emb is not None:
        coloring = _handle_f1(ctx, emb)
        return coloring, BranchTrace(ctx.steps)
    emb = find_induced(catalog("F2"), g)
    if emb is not None:
        coloring = _handle_f2(ctx, emb)
        return coloring, BranchTrace(ctx.steps)
    emb = find_induced(catalog("F3"), g)
    if emb is not None:
        coloring = _handle_f3(ctx, emb)
        return coloring, BranchTrace(ctx.steps)

    # with a C5 but no F1, F2, F3 the clique number collapses to 3
    if omega > 3:
        raise ProofViolationError(
            "C5-containing member without F1/F2/F3 should have clique number <= 3",
            oracle.clique_number(g)[1],
        )
    coloring = _color_small_omega(ctx)
    return coloring, BranchTrace(ctx.steps)


def handle_W(g: Graph, part: C5Partition, oracle: Oracle | None = None):
    """Standalone entry for the many-Y cases; None when |W| not in {4, 5}."""
    if len(part.w) not in (4, 5):
        return None
    oracle = oracle or Oracle(OracleLimits(max_chi_vertices=MAX_VERTICES))
    omega, _ = oracle.clique_number(g)
    ctx = _Ctx(g, oracle, omega)
    coloring = _handle_w(ctx, part)
    return coloring, BranchTrace(ctx.steps)


def color_small_omega(g: Graph, oracle: Oracle | None = None) -> tuple[Coloring, BranchTrace]:
    """Standalone entry for members with clique number at most 3."""
    oracle = oracle or Oracle(OracleLimits(max_chi_vertices=MAX_VERTICES))
    witness = verify_class(g)
    if witness is not None:
        raise ClassViolationError(witness.pattern, witness.embedding)
    omega, omega_witness = oracle.clique_number(g)
    if omega > 3:
        raise InputError(f"clique number {omega} exceeds 3: {omega_witness}")
    ctx = _Ctx(g, oracle, omega)
    coloring = _color_small_omega(ctx)
    return coloring, BranchTrace(ctx.steps)


def replay_trace(g: Graph, trace: BranchTrace, oracle: Oracle | None = None) -> None:
    """Re-verify every recorded clique, stable set, anticompleteness and
    counter; raises ProofViolationError on any mismatch."""
    oracle = oracle or Oracle(OracleLimits(max_chi_vertices=MAX_VERTICES))
    for step in trace.steps:
        rec = step.record
        if rec is None:
            continue
        for clique in rec.cliques:
            if not g.is_clique(mask_of(clique)):
                raise ProofViolationError("recorded clique is not complete", clique)
        for stab in rec.stable_sets:
            if not g.is_stable(mask_of(stab)):
                raise ProofViolationError("recorded stable set has an edge", stab)
        for s1, s2 in rec.anticomplete_pairs:
            edge = g.first_edge_between(mask_of(s1), mask_of(s2))
            if edge is not None:
                raise ProofViolationError("recorded anticomplete pair has an edge", edge)
        for name, verts, value in rec.counters:
            actual = popcount(oracle.max_clique_mask(g, mask_of(verts)))
            if actual != value:
                raise ProofViolationError(
                    f"recorded counter {name}={value} but set has clique number {actual}",
                    verts,
                )


# ---------------------------------------------------------------------------
# branch implementations
# ---------------------------------------------------------------------------


def _color_class_c(
    g: Graph, oracle: Oracle, decomp: tuple[int, list[int]]
) -> tuple[Coloring, BranchTrace]:
    iso_mask, blobs = decomp
    ctx = _Ctx(g, oracle, 0)
    weights = tuple(popcount(b) for b in blobs)
    for i, blob in enumerate(blobs):
        ctx.assert_clique(blob, f"blowup blob {i}")
        ctx.assert_complete(blob, blobs[(i + 1) % 5], f"blobs {i},{(i + 1) % 5}")
        ctx.assert_anticomplete(blob, blobs[(i + 2) % 5], f"blobs {i},{(i + 2) % 5}")
    for v in bits(iso_mask):
        if g.adj[v]:
            raise ProofViolationError("recorded isolated vertex has an edge", (v,))
    classes = c5_multicolor_classes(weights, oracle=oracle)
    assign: dict[int, int] = {}
    for blob, colors in zip(blobs, classes):
        for v, c in zip(bits(blob), colors):
            assign[v] = c
    for v in bits(iso_mask):
        assign[v] = 0
    coloring = normalize_coloring(assign, g.n)
    ok, edge = is_proper(g, coloring)
    if not ok:
        raise ProofViolationError("blowup coloring is not proper", edge)
    expected = c5_blowup_chromatic(weights)
    if coloring.num_colors != expected:
        raise ProofViolationError(
            "blowup coloring missed the exact color count",
            (coloring.num_colors, expected),
        )
    ctx.name_set("isolated", iso_mask)
    for i, blob in enumerate(blobs):
        ctx.name_set(f"blob_{i}", blob)
    ctx.steps.append(BranchStep("classC-W5", record=ctx.record))
    return coloring, BranchTrace(ctx.steps)


def _color_small_omega(ctx: _Ctx) -> Coloring:
    g, oracle, omega = ctx.g, ctx.oracle, ctx.omega
    if omega <= 1:
        return ctx.finish([ctx.stable_piece(g.full_mask, "edgeless graph")], "trivial", 1)
    if omega == 2:
        # triangle-free members are 4-colorable (known bound); color exactly
        coloring = _exact_coloring(g, oracle)
        if coloring.num_colors > 4:
            raise ProofViolationError(
                "triangle-free member needed more than 4 colors", coloring.num_colors
            )
        ctx.steps.append(BranchStep("omega3-trianglefree-fallback"))
        return coloring
    emb = find_induced(catalog("diamond"), g)
    if emb is None:
        # diamond-free members at clique number 3 are 6-colorable (known
        # bound); color exactly
        coloring = _exact_coloring(g, oracle)
        if coloring.num_colors > 6:
            raise ProofViolationError(
                "diamond-free member at omega 3 needed more than 6 colors",
                coloring.num_colors,
            )
        ctx.steps.append(BranchStep("omega3-diamondfree-fallback"))
        return coloring
    return _omega3_diamond(ctx, emb)


def _exact_coloring(g: Graph, oracle: Oracle) -> Coloring:
    chi, coloring = oracle.chromatic_number(g, enforce_size_limit=False)
    return coloring


def _omega3_diamond(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """Triangle plus pendant-pair decomposition for omega = 3 with a diamond.

    The diamond is {v1, v2, v3, x} with x adjacent to v2, v3 only.  R holds
    the vertices seeing at most v1 on the triangle; it induces disjoint
    cliques.  The rest splits into three stable sets S_i avoiding v_i.
    """
    g = ctx.g
    v1, v2, v3, x = emb[0], emb[1], emb[3], emb[2]
    cmask = mask_of((v1, v2, v3))
    ctx.name_set("diamond", mask_of(emb))
    ctx.name_set("triangle", cmask)
    r_mask = 0
    s = [0, 0, 0]
    tri = (v1, v2, v3)
    for v in range(g.n):
        if (1 << v) & cmask:
            continue
        trace = tuple(u for u in tri if g.has_edge(v, u))
        if trace in ((), (v1,)):
            r_mask |= 1 << v
        elif trace == (v1, v2, v3):
            raise ProofViolationError("K4 found in a clique-number-3 member", (v, *tri))
        elif v2 not in trace:
            s[1] |= 1 << v  # sees v3, not v2
        elif v1 not in trace:
            s[0] |= 1 << v  # sees v2, not v1
        else:
            s[2] |= 1 << v  # sees v1 and v2, not v3
    ctx.name_set("R", r_mask)
    for i in range(3):
        ctx.name_set(f"S{i + 1}", s[i])
    r_piece = ctx.cluster_piece(r_mask, "R")
    if r_piece.num_colors > 3:
        raise ProofViolationError("R needed more than 3 colors", r_piece.num_colors)
    pieces = [r_piece]
    for i, vi in enumerate(tri):
        pieces.append(ctx.stable_piece(s[i] | (1 << vi), f"S{i + 1} with its triangle vertex"))
    return ctx.finish(pieces, "omega3-diamond", 6, embedding=emb)


# -- W handlers --------------------------------------------------------------


def _r_blobs(part: C5Partition) -> list[int]:
    return [part.y[i] | (1 << part.c[i]) for i in range(5)]


def _handle_w(ctx: _Ctx, part: C5Partition) -> Coloring:
    w = part.w
    if len(w) == 5:
        return _handle_w5(ctx, part)
    if len(w) == 4:
        return _handle_w4(ctx, part)
    raise InputError(f"W handler needs |W| in {{4,5}}, got {sorted(w)}")


def _handle_w5(ctx: _Ctx, part: C5Partition) -> Coloring:
    g = ctx.g
    ctx.assert_empty(part.union("a", "b", "x", "z"), "A,B,X,Z with all Y nonempty")
    for v in bits(part.t):
        if g.adj[v]:
            raise ProofViolationError("T vertex should be isolated here", (v,))
    blobs = _r_blobs(part)
    for i in range(5):
        ctx.assert_clique(blobs[i], f"R_{i + 1}")
        ctx.assert_complete(blobs[i], blobs[(i + 1) % 5], f"R_{i + 1},R_{(i + 1) % 5 + 1}")
        ctx.assert_anticomplete(blobs[i], blobs[(i + 2) % 5], f"R_{i + 1},R_{(i + 2) % 5 + 1}")
        ctx.name_set(f"R{i + 1}", blobs[i])
    weights = tuple(popcount(b) for b in blobs)
    classes = c5_multicolor_classes(weights, oracle=ctx.oracle)
    assign: dict[int, int] = {}
    for blob, colors in zip(blobs, classes):
        for v, c in zip(bits(blob), colors):
            assign[v] = c
    for v in bits(part.t):
        assign[v] = 0
    coloring = normalize_coloring(assign, g.n)
    ok, edge = is_proper(g, coloring)
    if not ok:
        raise ProofViolationError("W5 blowup coloring is not proper", edge)
    expected = c5_blowup_chromatic(weights)
    if coloring.num_colors != expected:
        raise ProofViolationError(
            "W5 coloring missed the exact count", (coloring.num_colors, expected)
        )
    ctx.steps.append(BranchStep("classC-W5", part.c, record=ctx.record))
    ctx.record = DecompositionRecord()
    return coloring


def _handle_w4(ctx: _Ctx, part: C5Partition) -> Coloring:
    g = ctx.g
    missing = next(i for i in range(5) if not part.y[i])
    if missing != 4:
        order = tuple((missing + 1 + k) % 5 for k in range(5))
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    ctx.assert_empty(part.y[4], "Y_5 after rotation")
    ctx.assert_empty(part.a[0] | part.a[3] | part.a[4], "A_1,A_4,A_5 with four Y's")
    ctx.assert_empty(part.union("b", "x", "z"), "B,X,Z with four Y's")
    blobs = _r_blobs(part)[:4]
    for i in range(4):
        ctx.assert_clique(blobs[i], f"R_{i + 1}")
        ctx.name_set(f"R{i + 1}", blobs[i])
        if i < 3:
            ctx.assert_complete(blobs[i], blobs[i + 1], f"R_{i + 1},R_{i + 2}")
    ctx.assert_anticomplete(blobs[0], blobs[2], "R_1,R_3")
    ctx.assert_anticomplete(blobs[0], blobs[3], "R_1,R_4")
    ctx.assert_anticomplete(blobs[1], blobs[3], "R_2,R_4")
    weights = [popcount(b) for b in blobs]
    k = max(weights[0] + weights[1], weights[1] + weights[2], weights[2] + weights[3])
    assign: dict[int, int] = {}
    prev: list[int] = []
    for i, blob in enumerate(blobs):
        avail = [c for c in range(k) if c not in prev]
        mine = avail[: weights[i]]
        if len(mine) < weights[i]:
            raise ProofViolationError("path blowup palette exhausted", (i, k))
        for v, c in zip(bits(blob), mine):
            assign[v] = c
        prev = mine
    path_piece = PartialColoring(assign, k)
    extra = ctx.stable_piece(
        part.a[1] | part.a[2] | part.t | (1 << part.c[4]), "A_2,A_3,T,v_5"
    )
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([path_piece, extra], "W4", bound, c5=part.c)


# -- the F1 chain ------------------------------------------------------------


def _handle_f1(ctx: _Ctx, f1_emb: tuple[int, ...]) -> Coloring:
    g = ctx.g
    emb = find_induced(catalog("F1'"), g)
    if emb is not None:
        return _construct_f1prime(ctx, emb)
    emb = find_induced(catalog("F1''"), g)
    if emb is not None:
        return _construct_f1doubleprime(ctx, emb)
    return _construct_f1(ctx, f1_emb)


def _construct_f1prime(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """Two adjacent consecutive-triple attachments at cycle distance one."""
    g = ctx.g
    part = partition_around_c5(g, tuple(emb[:5]))
    if not (part.y[0] >> emb[5] & 1) or not (part.y[1] >> emb[6] & 1):
        raise AssertionError("internal: F1' embedding misclassified")
    if len(part.w) in (4, 5):
        return _handle_w(ctx, part)
    if part.y[4]:
        # |W| <= 3 with Y_1, Y_2 nonempty leaves room for only one more
        ctx.assert_empty(part.y[2], "Y_3 when Y_5 is nonempty at |W|<=3")
        order = (1, 0, 4, 3, 2)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(b[1] | b[2] | b[3] | b[4], "B beyond B_1 with Y_1,Y_2 nonempty")
    ctx.assert_empty(x[2] | x[3] | x[4], "X_3,X_4,X_5 with Y_1,Y_2 nonempty")
    ctx.assert_empty(z[0] | z[1] | z[2] | z[4], "Z beyond Z_4 with Y_1,Y_2 nonempty")
    ctx.assert_empty(a[3], "A_4 with Y_1,Y_2 nonempty")

    r = _r_blobs(part)
    for i in range(5):
        ctx.name_set(f"R{i + 1}", r[i])
    x1p = _big_component_part(g, x[0])
    x2p = _big_component_part(g, x[1])
    ctx.name_set("X1'", x1p)
    ctx.name_set("X2'", x2p)
    q1 = max(
        ctx.omega_of(r[0], "omega(R1)"),
        ctx.omega_of(r[2], "omega(R3)"),
        ctx.omega_of(x1p, "omega(X1')"),
    )
    w_r2 = ctx.omega_of(r[1], "omega(R2)")
    w_r4 = ctx.omega_of(r[3], "omega(R4)")
    w_x2p = ctx.omega_of(x2p, "omega(X2')")
    q2 = max(w_r2, w_r4 - q1, w_x2p)
    q3 = ctx.omega_of(z[3], "q3=omega(Z4)")
    ctx.record.counters.append(("q1", tuple(bits(r[0] | r[2] | x1p)), q1))
    ctx.record.counters.append(("q2", tuple(bits(r[1] | r[3] | x2p)), max(w_r2, w_x2p, w_r4 - q1)))
    s_region = x1p | r[0] | r[2] | x2p | r[1]
    ctx.name_set("S", s_region)
    clique_region = s_region | r[3] | z[3] | (1 << c[2])

    if y[3]:
        # alternative route: Y_4 nonempty forces X_1, X_2, Y_3, A_3, A_5 away
        ctx.assert_empty(x[0] | x[1], "X_1,X_2 with Y_4 nonempty")
        ctx.assert_empty(y[2], "Y_3 with Y_1,Y_2,Y_4 nonempty at |W|<=3")
        ctx.assert_empty(a[2] | a[4], "A_3,A_5 with Y_4 nonempty")
        ctx.assert_clique(r[0] | r[1], "R_1 union R_2")
        core = ctx.merge(
            "R_1R_2 against R_4",
            ctx.clique_piece(r[0] | r[1], "R_1 union R_2"),
            ctx.clique_piece(r[3], "R_4"),
        )
        if core.num_colors > q1 + q2:
            raise ProofViolationError(
                "R-piece exceeded q1+q2", (core.num_colors, q1 + q2)
            )
        z_piece = ctx.cograph_piece(z[3], "Z_4")
        rest = ctx.stable_piece(
            a[0] | a[1] | b[0] | t | (1 << c[2]) | (1 << c[4]),
            "A_1,A_2,B_1,T,v_3,v_5",
        )
        ctx.exhibit_clique(clique_region, q1 + q2 + q3, "clique of size q1+q2+q3")
        bound = min(ctx.omega + 1, phi(ctx.omega))
        return ctx.finish([core, z_piece, rest], "F1'", bound, c5=c, embedding=emb)

    # main route: Y_4 and Y_5 empty
    p1 = ctx.merge(
        "A_5,X_1,R_1,R_3",
        ctx.cluster_piece(x1p | r[0] | r[2], "X_1' with R_1, R_3"),
        ctx.two_stable_piece(a[4], x[0] & ~x1p, "A_5 with the stable part of X_1"),
    )
    if p1.num_colors > q1:
        raise ProofViolationError("piece A_5,X_1,R_1,R_3 exceeded q1", (p1.num_colors, q1))
    p2 = ctx.merge(
        "A_3,X_2,R_2,v_4",
        ctx.cluster_piece(x2p | r[1], "X_2' with R_2"),
        ctx.two_stable_piece(a[2], x[1] & ~x2p, "A_3 with the stable part of X_2"),
        ctx.stable_piece(1 << c[3], "v_4"),
    )
    if p2.num_colors > q2:
        raise ProofViolationError("piece A_3,X_2,R_2,v_4 exceeded q2", (p2.num_colors, q2))
    p3 = ctx.cograph_piece(z[3], "Z_4")
    if p3.num_colors > q3:
        raise ProofViolationError("Z_4 exceeded q3", (p3.num_colors, q3))
    p4 = ctx.stable_piece(a[0] | a[1] | b[0] | t | (1 << c[4]), "A_1,A_2,B_1,T,v_5")
    ctx.exhibit_clique(clique_region, q1 + q2 + q3, "clique of size q1+q2+q3")
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([p1, p2, p3, p4], "F1'", bound, c5=c, embedding=emb)


def _big_component_part(g: Graph, mask: int) -> int:
    out = 0
    for comp in g.components(mask):
        if popcount(comp) >= 2:
            out |= comp
    return out


def _construct_f1doubleprime(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """Two nonadjacent consecutive-triple attachments at cycle distance two."""
    g = ctx.g
    part = partition_around_c5(g, tuple(emb[:5]))
    if not (part.y[0] >> emb[5] & 1) or not (part.y[2] >> emb[6] & 1):
        raise AssertionError("internal: F1'' embedding misclassified")

    def build(part: C5Partition):
        y, z = part.y, part.z
        q1 = ctx.omega_of(y[0], "q1=omega(Y1)")
        q3 = ctx.omega_of(y[2], "q3=omega(Y3)")
        q1p = ctx.omega_of(z[0], "q1'=omega(Z1)")
        q3p = ctx.omega_of(z[2], "q3'=omega(Z3)")
        return q1, q3, q1p, q3p

    def check_structure(part: C5Partition) -> None:
        y, a, b, x, z = part.y, part.a, part.b, part.x, part.z
        ctx.assert_empty(b[0] | b[1] | b[3], "B_1,B_2,B_4 with Y_1,Y_3 nonempty")
        ctx.assert_empty(x[0] | x[2] | x[3] | x[4], "X beyond X_2 with Y_1,Y_3 nonempty")
        ctx.assert_empty(z[1] | z[3] | z[4], "Z_2,Z_4,Z_5 with Y_1,Y_3 nonempty")
        ctx.assert_empty(y[1] | y[3] | y[4], "Y_2,Y_4,Y_5 without an F1'")
        ctx.assert_empty(a[3] | a[4], "A_4,A_5 with Y_1,Y_3 nonempty")
        ctx.assert_stable(x[1], "X_2")
        ctx.assert_clique(y[0], "Y_1")
        ctx.assert_clique(y[2], "Y_3")

    check_structure(part)
    q1, q3, q1p, q3p = build(part)
    if q3 > q1 and q3p > q1p:
        order = (2, 1, 0, 4, 3)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
        check_structure(part)
        q1, q3, q1p, q3p = build(part)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c

    if q1 > q3 and q1p > q3p:
        # both maxima on the Y_1 side: three structured pieces and two stable
        p1 = ctx.merge(
            "A_2,Y_1,Y_3,v_4",
            ctx.stable_piece(a[1], "A_2"),
            ctx.clique_piece(y[0], "Y_1"),
            ctx.clique_piece(y[2] | (1 << c[3]), "Y_3 with v_4"),
        )
        if p1.num_colors > q1:
            raise ProofViolationError("piece A_2,Y_1,Y_3,v_4 exceeded q1", p1.num_colors)
        p2 = ctx.merge(
            "X_2,Z_1,Z_3,v_2,v_5",
            ctx.stable_piece(x[1] | (1 << c[1]), "X_2 with v_2"),
            ctx.cograph_piece(z[0], "Z_1"),
            stack_disjoint(
                ctx.cograph_piece(z[2], "Z_3"), ctx.stable_piece(1 << c[4], "v_5")
            ),
        )
        if p2.num_colors > q1p:
            raise ProofViolationError("piece X_2,Z_1,Z_3,v_2,v_5 exceeded q1'", p2.num_colors)
        p3 = ctx.stable_piece(a[0] | b[4] | t | (1 << c[2]), "A_1,B_5,T,v_3")
        p4 = ctx.stable_piece(a[2] | b[2] | (1 << c[0]), "A_3,B_3,v_1")
        ctx.exhibit_clique(
            y[0] | z[0] | (1 << c[0]) | (1 << c[1]), q1 + q1p + 1, "clique of size q1+q1'+1"
        )
        bound = min(ctx.omega + 1, phi(ctx.omega))
        return ctx.finish([p1, p2, p3, p4], "F1''", bound, c5=c, embedding=emb)

    q = max(q1, q3)
    qp = max(q1p, q3p)
    clique_region = part.union("y", "z") | b[2] | b[4] | part.c_mask()
    if b[2] and b[4]:
        p1 = ctx.merge(
            "A_2,Y_1,Y_3",
            ctx.stable_piece(a[1], "A_2"),
            ctx.clique_piece(y[0], "Y_1"),
            ctx.clique_piece(y[2], "Y_3"),
        )
        p2 = ctx.merge(
            "X_2,v_2,Z_1,Z_3",
            ctx.stable_piece(x[1] | (1 << c[1]), "X_2 with v_2"),
            ctx.cograph_piece(z[0], "Z_1"),
            ctx.cograph_piece(z[2], "Z_3"),
        )
        if p2.num_colors == 0:
            p2 = ctx.stable_piece(1 << c[1], "v_2")
        p3 = ctx.stable_piece(a[0] | b[4] | t | (1 << c[2]), "A_1,B_5,T,v_3")
        p4 = ctx.stable_piece(a[2] | b[2] | (1 << c[4]), "A_3,B_3,v_5")
        p5 = ctx.stable_piece((1 << c[0]) | (1 << c[3]), "v_1,v_4")
        target = q + max(1, qp) + 2
        ctx.exhibit_clique(clique_region, target, f"clique of size {target}")
        bound = min(ctx.omega + 1, phi(ctx.omega))
        return ctx.finish([p1, p2, p3, p4, p5], "F1''", bound, c5=c, embedding=emb)

    if b[2]:
        order = (2, 1, 0, 4, 3)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
        check_structure(part)
        q1, q3, q1p, q3p = build(part)
        q, qp = max(q1, q3), max(q1p, q3p)
        y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(b[2], "B_3 after normalization")
    p1 = ctx.merge(
        "A_2,Y_1,Y_3",
        ctx.stable_piece(a[1], "A_2"),
        ctx.clique_piece(y[0], "Y_1"),
        ctx.clique_piece(y[2], "Y_3"),
    )
    p2 = ctx.merge(
        "Z_1,Z_3", ctx.cograph_piece(z[0], "Z_1"), ctx.cograph_piece(z[2], "Z_3")
    )
    p3 = ctx.stable_piece(x[1] | (1 << c[1]) | (1 << c[4]), "X_2,v_2,v_5")
    p4 = ctx.stable_piece(a[0] | b[4] | t | (1 << c[2]), "A_1,B_5,T,v_3")
    p5 = ctx.stable_piece(a[2] | (1 << c[0]) | (1 << c[3]), "A_3,v_1,v_4")
    ctx.exhibit_clique(clique_region, q + qp + 2, "clique of size q+q'+2")
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([p1, p2, p3, p4, p5], "F1''", bound, c5=c, embedding=emb)


def _construct_f1(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """A single consecutive-triple attachment, no F1' or F1'' anywhere."""
    g = ctx.g
    part = partition_around_c5(g, tuple(emb[:5]))
    if not (part.y[0] >> emb[5] & 1):
        raise AssertionError("internal: F1 embedding misclassified")

    if part.b[4] and not part.b[0]:
        order = (0, 4, 3, 2, 1)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(b[1] | b[3], "B_2,B_4 with Y_1 nonempty")
    ctx.assert_empty(x[2] | x[3], "X_3,X_4 with Y_1 nonempty")
    ctx.assert_empty(z[1] | z[4], "Z_2,Z_5 with Y_1 nonempty")
    ctx.assert_empty(y[1] | y[2] | y[3] | y[4], "Y beyond Y_1 without F1',F1''")
    ctx.assert_stable(x[1], "X_2")
    ctx.assert_stable(x[4], "X_5")
    ctx.assert_clique(y[0], "Y_1")

    r1 = y[0] | (1 << c[0])
    s1 = a[1] | a[4] | x[0]
    s2 = x[1] | x[4] | z[0] | z[2] | z[3]
    ctx.name_set("R1", r1)
    ctx.name_set("S1", s1)
    ctx.name_set("S2", s2)
    w_r1 = popcount(r1)
    q = max(ctx.omega_of(s1, "omega(S1)"), w_r1)
    qp = ctx.omega_of(s2, "q'=omega(S2)")
    ctx.record.counters.append(("q", tuple(bits(s1 | r1)), q))

    if b[0]:
        return _f1_with_b1(ctx, part, emb, q, qp)
    if a[0] and b[2]:
        return _f1_with_a1_b3(ctx, part, emb, q, qp)

    # main route: B_1, B_5 empty and at most one of A_1, B_3 nonempty
    if a[0] and (a[2] | a[3]):
        raise ProofViolationError(
            "A_1 and A_3 or A_4 both nonempty without B_1, B_5",
            (next(bits(a[0])), next(bits(a[2] | a[3]))),
        )
    s1_piece = _color_s1_structure(ctx, a[1], a[4], x[0])
    p1 = ctx.merge(
        "S_1,R_1,v_3,v_4",
        s1_piece,
        ctx.clique_piece(r1, "R_1 with v_1"),
        ctx.clique_piece((1 << c[2]) | (1 << c[3]), "v_3,v_4"),
    )
    if p1.num_colors > q:
        raise ProofViolationError("piece S_1,R_1,v_3,v_4 exceeded q", (p1.num_colors, q))
    p2 = ctx.cograph_piece(s2, "S_2")
    p3 = ctx.stable_piece(
        a[0] | a[2] | a[3] | b[2] | t | (1 << c[1]) | (1 << c[4]),
        "A_1,A_3,A_4,B_3,T,v_2,v_5",
    )
    ctx.exhibit_clique(
        s1 | s2 | r1 | (1 << c[1]) | (1 << c[4]), q + qp, "clique of size q+q'"
    )
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([p1, p2, p3], "F1", bound, c5=c, embedding=emb)


def _f1_with_b1(ctx: _Ctx, part: C5Partition, emb, q: int, qp: int) -> Coloring:
    g = ctx.g
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(part.union("a"), "A with B_1 nonempty")
    ctx.assert_empty(b[4], "B_5 with B_1 nonempty")
    ctx.assert_empty(z[2], "Z_3 with B_1 nonempty")
    r1 = y[0] | (1 << c[0])
    w_r1 = popcount(r1)
    w_x1 = ctx.omega_of(x[0], "omega(X1)")
    if w_x1 > w_r1:
        # X_1 dominates: stash B_1 on one extra color inside the q budget
        core = ctx.cluster_piece(x[0], "X_1")
        r1_piece = ctx.clique_piece(r1, "R_1")
        b1_piece = ctx.stable_piece(b[0], "B_1")
        shifted_b1 = PartialColoring({v: w_r1 for v in b1_piece.assign}, w_r1 + 1)
        ctx.assert_anticomplete(b[0], x[0], "B_1 against X_1")
        ctx.assert_anticomplete(r1, x[0], "R_1 against X_1")
        p1 = ctx.merge(
            "B_1,Y_1,X_1,v_1,v_3,v_4 (color reuse checked)",
            ctx.clique_piece((1 << c[2]) | (1 << c[3]), "v_3,v_4"),
            core,
        )
        combined = dict(p1.assign)
        combined.update(r1_piece.assign)
        combined.update(shifted_b1.assign)
        p1 = PartialColoring(combined, max(p1.num_colors, w_r1 + 1))
        if p1.num_colors > q:
            raise ProofViolationError("B_1 piece exceeded q", (p1.num_colors, q))
        p2 = ctx.cograph_piece(x[1] | x[4] | z[0] | z[3], "X_2,X_5,Z_1,Z_4")
        if p2.num_colors > qp:
            raise ProofViolationError("S_2 piece exceeded q'", (p2.num_colors, qp))
        p3 = ctx.stable_piece(b[2] | t | (1 << c[1]) | (1 << c[4]), "B_3,T,v_2,v_5")
        region = part.union("x", "z") | y[0] | b[0] | part.c_mask()
        ctx.exhibit_clique(region, q + qp, "clique of size q+q'")
        bound = min(ctx.omega + 1, phi(ctx.omega))
        return ctx.finish([p1, p2, p3], "F1", bound, c5=c, embedding=emb)

    p1 = ctx.stable_piece(b[0] | x[1], "B_1,X_2")
    p2 = ctx.stable_piece(b[2] | t | (1 << c[1]) | (1 << c[4]), "B_3,T,v_2,v_5")
    p3 = ctx.merge(
        "X_1,Y_1,v_1,v_3,v_4",
        ctx.cluster_piece(x[0], "X_1"),
        ctx.clique_piece(r1, "R_1"),
        ctx.clique_piece((1 << c[2]) | (1 << c[3]), "v_3,v_4"),
    )
    if p3.num_colors > w_r1:
        raise ProofViolationError("X_1,Y_1 piece exceeded |R_1|", (p3.num_colors, w_r1))
    p4 = ctx.cograph_piece(x[4] | z[0] | z[3], "X_5,Z_1,Z_4")
    qpp = p4.num_colors
    region = x[4] | z[0] | z[3] | y[0] | b[0] | (1 << c[0]) | (1 << c[1])
    ctx.exhibit_clique(region, w_r1 + qpp + 1, "clique of size |R_1|+omega(X5,Z1,Z4)+1")
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([p1, p2, p3, p4], "F1", bound, c5=c, embedding=emb)


def _f1_with_a1_b3(ctx: _Ctx, part: C5Partition, emb, q: int, qp: int) -> Coloring:
    g = ctx.g
    if part.z[3]:
        ctx.assert_empty(part.z[2], "Z_3 when Z_4 is nonempty here")
        order = (0, 4, 3, 2, 1)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(z[3], "Z_4 after normalization")
    ctx.assert_empty(a[1] | a[2] | a[3] | a[4], "A beyond A_1 with B_3 nonempty")
    ctx.assert_empty(x[0], "X_1 with A_1 and B_3 nonempty")
    if popcount(a[0]) != 1 or popcount(b[2]) != 1:
        raise ProofViolationError(
            "A_1 and B_3 should be single vertices here", (tuple(bits(a[0])), tuple(bits(b[2])))
        )
    a1 = next(bits(a[0]))
    b3 = next(bits(b[2]))
    r1 = y[0] | (1 << c[0])
    p1 = ctx.merge(
        "Y_1,v_1 against b_3,v_4",
        ctx.clique_piece(r1, "R_1"),
        ctx.clique_piece((1 << b3) | (1 << c[3]), "b_3,v_4"),
    )
    if p1.num_colors > q:
        raise ProofViolationError("R_1/b_3 piece exceeded q", (p1.num_colors, q))
    p2 = ctx.merge(
        "X_2,X_5,Z_1,Z_3,v_2",
        ctx.cograph_piece(x[1] | x[4] | z[0] | z[2], "X_2,X_5,Z_1,Z_3"),
        ctx.stable_piece(1 << c[1], "v_2"),
    )
    if p2.num_colors > max(qp, 1):
        raise ProofViolationError("S_2 piece exceeded max(q',1)", (p2.num_colors, qp))
    p3 = ctx.stable_piece(t | (1 << a1) | (1 << c[2]) | (1 << c[4]), "T,a_1,v_3,v_5")
    region = x[1] | x[4] | z[0] | z[2] | y[0] | (1 << c[0]) | (1 << c[1]) | (1 << c[4])
    ctx.exhibit_clique(region, q + max(qp, 1), "clique of size q+max(q',1)")
    bound = min(ctx.omega + 1, phi(ctx.omega))
    return ctx.finish([p1, p2, p3], "F1", bound, c5=c, embedding=emb)


def _color_s1_structure(ctx: _Ctx, a2: int, a5: int, x1: int) -> PartialColoring:
    """Color A_2 u A_5 u X_1 with its clique number.

    Structure (forced by the forbidden patterns, re-verified here): A_2 and
    A_5 are stable and complete to each other; X_1 is a disjoint union of
    cliques; every X_1 vertex has far-A neighbors on at most one side; every
    far-A vertex is complete to at most one X_1 clique and to nothing else
    in X_1.
    """
    g = ctx.g
    if not (a2 | a5 | x1):
        return EMPTY_PIECE
    ctx.assert_stable(a2, "A_2")
    ctx.assert_stable(a5, "A_5")
    if a2 and a5:
        ctx.assert_complete(a2, a5, "A_2 against A_5")
    comps = g.components(x1)
    for comp in comps:
        if not g.is_clique(comp):
            raise ProofViolationError("X_1 component should be a clique", tuple(bits(comp)))
    for v in bits(x1):
        if g.adj[v] & a2 and g.adj[v] & a5:
            raise ProofViolationError(
                "X_1 vertex attached to both far A-sides", (v,)
            )
    side_of: dict[int, int | None] = {}
    for idx, comp in enumerate(comps):
        side = 0
        if g.first_edge_between(comp, a2):
            side |= 1
        if g.first_edge_between(comp, a5):
            side |= 2
        if side == 3:
            raise ProofViolationError(
                "X_1 clique attached to both far A-sides", tuple(bits(comp))
            )
        side_of[idx] = side
    for av in bits(a2 | a5):
        hit = g.adj[av] & x1
        if not hit:
            continue
        owners = [comp for comp in comps if comp & hit]
        if len(owners) != 1:
            raise ProofViolationError("far A-vertex attached to two X_1 cliques", (av,))
        if hit != owners[0]:
            raise ProofViolationError(
                "far A-vertex only partially attached to an X_1 clique", (av,)
            )
    assign: dict[int, int] = {}
    color_a2 = 0 if a2 else None
    color_a5 = (1 if a2 else 0) if a5 else None
    for v in bits(a2):
        assign[v] = 0
    for v in bits(a5):
        assign[v] = color_a5
    top = 0
    for idx, comp in enumerate(comps):
        skip = color_a2 if side_of[idx] == 1 else (color_a5 if side_of[idx] == 2 else None)
        palette = [col for col in range(popcount(comp) + 1) if col != skip]
        for v, col in zip(bits(comp), palette):
            assign[v] = col
            top = max(top, col)
    used = max([top] + [col for col in (color_a2, color_a5) if col is not None])
    return PartialColoring(assign, used + 1)


# -- F2 and F3 ---------------------------------------------------------------


def _handle_f2(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """An adjacent pair with the same nonconsecutive-triple attachment."""
    g = ctx.g
    part = partition_around_c5(g, tuple(emb[:5]))
    z_pair = (1 << emb[5]) | (1 << emb[6])
    if not (part.z[0] & z_pair) == z_pair:
        raise AssertionError("internal: F2 embedding misclassified")
    if ctx.omega < 4:
        raise ProofViolationError("F2 forces clique number at least 4", emb)

    if part.x[2] == 0 and part.x[3]:
        order = (0, 4, 3, 2, 1)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(part.union("y"), "Y without an F1")
    ctx.assert_empty(b[1] | b[3], "B_2,B_4 with Z_1 nonempty")
    ctx.assert_empty(z[1] | z[4], "Z_2,Z_5 with an edge in Z_1")
    for i in range(5):
        ctx.assert_stable(x[i], f"X_{i + 1} without an F1")

    s_mask = x[1] | x[4] | z[0] | z[2] | z[3]
    ctx.name_set("S", s_mask)
    groups = [x[1] | x[4], z[0], z[2] | (1 << c[4]), z[3] | (1 << c[1])]
    for gi in range(4):
        for gj in range(gi + 1, 4):
            ctx.assert_anticomplete(groups[gi], groups[gj], f"S-groups {gi},{gj}")
    for zi in (0, 2, 3):
        wz = ctx.omega_of(z[zi], f"omega(Z{zi + 1})")
        if wz > ctx.omega - 2:
            raise ProofViolationError(
                f"Z_{zi + 1} clique number should be at most omega-2", wz
            )

    if not (x[2] | x[3]):
        s_piece = ctx.merge(
            "S",
            ctx.two_stable_piece(x[1], x[4], "X_2 against X_5"),
            ctx.cograph_piece(z[0], "Z_1"),
            ctx.cograph_piece(z[2], "Z_3"),
            ctx.cograph_piece(z[3], "Z_4"),
        )
        if s_piece.num_colors > ctx.omega - 2:
            raise ProofViolationError("S exceeded omega-2", s_piece.num_colors)
        two = _l2_two_coloring(ctx, part)
        rest = ctx.stable_piece(
            a[2] | a[3] | b[2] | t | (1 << c[1]) | (1 << c[4]), "A_3,A_4,B_3,T,v_2,v_5"
        )
        return ctx.finish(
            [s_piece, two, rest], "F2", ctx.omega + 1, c5=c, embedding=emb
        )

    ctx.assert_empty(b[0], "B_1 with X_3 nonempty")
    ctx.assert_empty(a[4] | b[4], "A_5,B_5 with X_3 and Z_1 populated")
    zpair_now = z_pair if (z[0] & z_pair) == z_pair else z[0]
    ctx.assert_complete(x[2] | x[3], zpair_now & z[0], "X_3,X_4 against the Z_1 edge pair")
    ctx.assert_stable(z[3], "Z_4 with X_3 nonempty")
    s_piece = ctx.merge(
        "S with v_2",
        ctx.two_stable_piece(x[1], x[4], "X_2 against X_5"),
        ctx.cograph_piece(z[0], "Z_1"),
        ctx.cograph_piece(z[2], "Z_3"),
        ctx.two_stable_piece(z[3], 1 << c[1], "Z_4 against v_2"),
    )
    if s_piece.num_colors > ctx.omega - 2:
        raise ProofViolationError("S with v_2 exceeded omega-2", s_piece.num_colors)
    if not x[3]:
        p2 = ctx.stable_piece(a[1] | x[0] | x[2] | (1 << c[0]) | (1 << c[2]), "A_2,X_1,X_3,v_1,v_3")
        p3 = ctx.stable_piece(a[2] | a[3] | b[2] | t | (1 << c[4]), "A_3,A_4,B_3,T,v_5")
        p4 = ctx.stable_piece(a[0] | (1 << c[3]), "A_1,v_4")
        return ctx.finish([s_piece, p2, p3, p4], "F2", ctx.omega + 1, c5=c, embedding=emb)
    ctx.assert_empty(a[1], "A_2 with X_3 and X_4 nonempty")
    p2 = ctx.stable_piece(x[0] | x[3] | (1 << c[0]) | (1 << c[3]), "X_1,X_4,v_1,v_4")
    p3 = ctx.stable_piece(a[2] | a[3] | b[2] | x[2] | (1 << c[4]), "A_3,A_4,B_3,X_3,v_5")
    p4 = ctx.stable_piece(a[0] | t | (1 << c[2]), "A_1,T,v_3")
    return ctx.finish([s_piece, p2, p3, p4], "F2", ctx.omega + 1, c5=c, embedding=emb)


def _l2_two_coloring(ctx: _Ctx, part: C5Partition) -> PartialColoring:
    """Two colors for A_1,A_2,A_5,B_1,B_5,X_1 and v_1,v_3,v_4 when X_1 is
    stable: the piece is triangle-free by the structure theory, so a BFS
    bipartition suffices and certifies itself."""
    a, b, x, c = part.a, part.b, part.x, part.c
    ctx.assert_stable(x[0], "X_1 (stable hypothesis)")
    piece_mask = a[0] | a[1] | a[4] | b[0] | b[4] | x[0]
    piece_mask |= (1 << c[0]) | (1 << c[2]) | (1 << c[3])
    try:
        piece = color_bipartite(ctx.g, piece_mask)
    except PreconditionError as exc:
        raise ProofViolationError(
            "A,B_1,B_5,X_1 piece should be 2-colorable", exc.witness
        ) from exc
    return piece


def _handle_f3(ctx: _Ctx, emb: tuple[int, ...]) -> Coloring:
    """A nonconsecutive-triple attachment joined to an edge-pair attachment."""
    g = ctx.g
    part = partition_around_c5(g, tuple(emb[:5]))
    z1s, b3s = emb[5], emb[6]
    if not (part.z[0] >> z1s & 1) or not (part.b[2] >> b3s & 1):
        raise AssertionError("internal: F3 embedding misclassified")
    if ctx.omega < 4:
        raise ProofViolationError("F3 forces clique number at least 4", emb)
    ctx.assert_clique(
        (1 << z1s) | (1 << b3s) | (1 << part.c[2]) | (1 << part.c[3]),
        "K4 from the F3 attachments",
    )

    if part.z[3]:
        ctx.assert_empty(part.z[2], "Z_3 when Z_4 is nonempty")
        order = (0, 4, 3, 2, 1)
        part = relabel_partition(g, part, order)
        ctx.record.relabelings.append(order)
    y, a, b, x, z, t, c = part.y, part.a, part.b, part.x, part.z, part.t, part.c
    ctx.assert_empty(z[3], "Z_4 after normalization")
    ctx.assert_empty(a[1] | a[2] | a[3] | a[4], "A beyond A_1 with B_3 nonempty")
    ctx.assert_empty(b[1] | b[3], "B_2,B_4 with B_3 nonempty")
    ctx.assert_empty(z[1] | z[4], "Z_2,Z_5 with B_3 nonempty")
    ctx.assert_empty(part.union("y"), "Y without an F1")
    ctx.assert_empty(x[1] | x[4], "X_2,X_5 with B_3 nonempty")
    for i in (0, 2):
        ctx.assert_stable(z[i], f"Z_{i + 1} without an F2")

    p1 = ctx.stable_piece(a[0] | b[0] | b[4] | x[0] | (1 << c[3]), "A_1,B_1,B_5,X_1,v_4")
    p2 = ctx.stable_piece(x[2] | (1 << c[2]) | (1 << c[4]), "X_3,v_3,v_5")
    p3 = ctx.stable_piece(x[3] | (1 << c[0]), "X_4,v_1")
    p4 = ctx.stable_piece(b[2] | t, "B_3,T")
    p5 = ctx.stable_piece(z[0] | z[2] | (1 << c[1]), "Z_1,Z_3,v_2")
    return ctx.finish([p1, p2, p3, p4, p5], "F3", ctx.omega + 1, c5=c, embedding=emb)
