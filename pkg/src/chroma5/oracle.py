"""Exact desk-scale solvers: clique number, independence number,
k-colorability, chromatic number.

These are the ground truth every derived value and acceptance bound is
checked against.  All searches are deterministic (lowest-label tie-breaking)
so oracle outputs are reproducible fixtures.  Budgets are enforced as
CapabilityError, never as a wrong answer.
"""

from __future__ import annotations

import os
import sys
import time
from dataclasses import dataclass
from math import ceil

from .errors import CapabilityError, InputError
from .graph import MAX_VERTICES, Coloring, Graph, bits, normalize_coloring, popcount

sys.setrecursionlimit(20000)

BUDGET_ENV_VAR = "CHROMA_BUDGET_SECS"


@dataclass(frozen=True)
class OracleLimits:
    """Exceeding a limit yields CapabilityError, never a wrong answer."""

    max_chi_vertices: int = 40
    budget_secs: float = 60.0

    @staticmethod
    def from_env() -> "OracleLimits":
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None:
            return OracleLimits()
        try:
            return OracleLimits(budget_secs=float(raw))
        except ValueError as exc:
            raise InputError(f"bad {BUDGET_ENV_VAR} value {raw!r}") from exc


class _Budget:
    __slots__ = ("deadline", "ticks")

    def __init__(self, secs: float):
        self.deadline = time.monotonic() + secs
        self.ticks = 0

    def check(self) -> None:
        self.ticks += 1
        if self.ticks & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise CapabilityError("oracle time budget exceeded")


class Oracle:
    def __init__(self, limits: OracleLimits | None = None):
        self.limits = limits or OracleLimits()

    # -- cliques -----------------------------------------------------------

    def clique_number(self, g: Graph) -> tuple[int, tuple[int, ...]]:
        """Exact clique number with a verified witness clique."""
        if g.n > MAX_VERTICES:
            raise CapabilityError(f"graph too large: {g.n} > {MAX_VERTICES}")
        mask = self.max_clique_mask(g, g.full_mask)
        witness = tuple(bits(mask))
        if not g.is_clique(mask):
            raise AssertionError("internal: clique witness failed verification")
        return popcount(mask), witness

    def max_clique_mask(self, g: Graph, cand: int) -> int:
        """Maximum clique inside the candidate mask, as a mask."""
        budget = _Budget(self.limits.budget_secs)
        best_mask = 0
        best_size = 0
        adj = g.adj

        def color_sort(p: int) -> tuple[list[int], list[int]]:
            order: list[int] = []
            bounds: list[int] = []
            color = 0
            rest = p
            while rest:
                color += 1
                avail = rest
                while avail:
                    v = (avail & -avail).bit_length() - 1
                    order.append(v)
                    bounds.append(color)
                    avail &= ~adj[v] & ~(1 << v)
                    rest &= ~(1 << v)
                    avail &= rest
            return order, bounds

        def expand(rsize: int, rmask: int, p: int) -> None:
            nonlocal best_mask, best_size
            budget.check()
            if not p:
                if rsize > best_size:
                    best_size, best_mask = rsize, rmask
                return
            order, bounds = color_sort(p)
            for i in range(len(order) - 1, -1, -1):
                if rsize + bounds[i] <= best_size:
                    return
                v = order[i]
                expand(rsize + 1, rmask | (1 << v), p & adj[v])
                p &= ~(1 << v)

        expand(0, 0, cand)
        return best_mask

    def independence_number(self, g: Graph) -> tuple[int, tuple[int, ...]]:
        size, witness = self.clique_number(g.complement())
        if not g.is_stable(sum(1 << v for v in witness)):
            raise AssertionError("internal: stable witness failed verification")
        return size, witness

    # -- coloring ----------------------------------------------------------

    def is_k_colorable(self, g: Graph, k: int) -> Coloring | None:
        """A proper k-coloring, or a definitive None.

        Branch and bound in greatest-saturation-first order; color symmetry
        broken by precoloring a maximum clique and introducing at most one
        fresh color per branch point.
        """
        if g.n == 0:
            return Coloring((), 0)
        if k <= 0:
            return None
        if k >= g.n:
            return normalize_coloring({v: v for v in range(g.n)}, g.n)
        budget = _Budget(self.limits.budget_secs)
        clique = self.max_clique_mask(g, g.full_mask)
        if popcount(clique) > k:
            return None

        adj = g.adj
        colors = [-1] * g.n
        forbidden = [0] * g.n
        palette = (1 << k) - 1

        precolored = list(bits(clique))
        for c, v in enumerate(precolored):
            colors[v] = c
            for u in bits(adj[v]):
                if colors[u] == -1:
                    forbidden[u] |= 1 << c
        uncolored = g.full_mask & ~clique
        start_max = len(precolored) - 1

        def solve(uncolored_mask: int, max_used: int) -> bool:
            budget.check()
            if not uncolored_mask:
                return True
            pick = -1
            pick_sat = -1
            pick_deg = -1
            for v in bits(uncolored_mask):
                sat = popcount(forbidden[v])
                if sat >= k:
                    return False
                deg = popcount(adj[v] & uncolored_mask)
                if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
                    pick, pick_sat, pick_deg = v, sat, deg
            v = pick
            allowed = ~forbidden[v] & palette & ((1 << min(max_used + 2, k)) - 1)
            rest = uncolored_mask ^ (1 << v)
            for c in bits(allowed):
                colors[v] = c
                bit = 1 << c
                touched = 0
                for u in bits(adj[v] & rest):
                    if not forbidden[u] & bit:
                        forbidden[u] |= bit
                        touched |= 1 << u
                if solve(rest, max(max_used, c)):
                    return True
                for u in bits(touched):
                    forbidden[u] ^= bit
            colors[v] = -1
            return False

        if solve(uncolored, start_max):
            return normalize_coloring({v: colors[v] for v in range(g.n)}, g.n)
        return None

    def greedy_coloring(self, g: Graph) -> Coloring:
        """Deterministic DSATUR greedy; an upper bound, not necessarily optimal."""
        if g.n == 0:
            return Coloring((), 0)
        colors = [-1] * g.n
        forbidden = [0] * g.n
        for _ in range(g.n):
            pick, pick_sat, pick_deg = -1, -1, -1
            for v in range(g.n):
                if colors[v] != -1:
                    continue
                sat = popcount(forbidden[v])
                deg = g.degree(v)
                if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
                    pick, pick_sat, pick_deg = v, sat, deg
            c = next(bits(~forbidden[pick] & ((1 << g.n) - 1)))
            colors[pick] = c
            for u in bits(g.adj[pick]):
                forbidden[u] |= 1 << c
        return normalize_coloring(dict(enumerate(colors)), g.n)

    def chromatic_number(self, g: Graph, enforce_size_limit: bool = True) -> tuple[int, Coloring]:
        """Least k admitting a proper k-coloring, with an optimal coloring."""
        if enforce_size_limit and g.n > self.limits.max_chi_vertices:
            raise CapabilityError(
                f"exact chromatic number limited to {self.limits.max_chi_vertices} vertices"
                f" (got {g.n}); raise OracleLimits.max_chi_vertices to override"
            )
        if g.n == 0:
            return 0, Coloring((), 0)
        omega, _ = self.clique_number(g)
        alpha, _ = self.independence_number(g)
        lower = max(omega, ceil(g.n / alpha))
        greedy = self.greedy_coloring(g)
        if greedy.num_colors <= lower:
            return greedy.num_colors, greedy
        for k in range(lower, greedy.num_colors):
            res = self.is_k_colorable(g, k)
            if res is not None:
                return res.num_colors, res
        return greedy.num_colors, greedy


DEFAULT_ORACLE = Oracle()
