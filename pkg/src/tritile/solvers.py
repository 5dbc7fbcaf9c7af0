"""Exact maximum disjoint monochromatic-triangle packings.

The solver is a depth-first branch and bound over the (lexicographically
sorted) list of monochromatic triangles: the branching vertex is the lowest
vertex still appearing in an alive triangle, children either commit one of
its alive triangles or discard the vertex for good.  Three admissible upper
bounds are taken at every node and the minimum prunes:

* vertex count: ceil-free ``|alive support| // 3``;
* scatter: a greedy independent set U in the co-occurrence graph of the
  support (no triangle holds two U vertices, so every triangle needs two
  vertices outside U, giving ``|support - U| // 2``);
* cover: a greedy vertex cover of the triangle hypergraph (disjoint
  triangles consume distinct cover vertices).

A dynamic greedy packing (repeatedly take the alive triangle with the
smallest total triangle-degree over its vertices) seeds the incumbent; on
the extremal constructions in this package it already hits the optimum and
the root bound certifies it, so those solves finish in one node.

Everything here is deterministic and single-threaded; results never depend
on a worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from tritile.graphs import (
    AnomalyError,
    Bowtie,
    ColouredGraph,
    MonoClique,
    SearchBudgetExceeded,
    Tiling,
    iter_bits,
)

DEFAULT_NODE_BUDGET = 5_000_000
DEFAULT_TILING_BUDGET = 10_000_000


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact packing solve.

    ``optimum`` is exact when ``proved_optimal`` is set and otherwise the
    best packing size found before the node budget ran out; ``tiling`` is a
    witness of that size.
    """

    optimum: int
    tiling: Tiling
    nodes_explored: int
    proved_optimal: bool


class _PackingSearch:
    """Branch and bound over one fixed triangle list."""

    def __init__(self, triangles: Sequence[MonoClique], budget: int):
        self.tris = list(triangles)
        self.masks = [t.mask for t in self.tris]
        self.budget = budget
        self.nodes = 0
        self.best_count = -1
        self.best_sel: list[int] = []

    def run(self) -> SolveResult:
        alive = list(range(len(self.tris)))
        seed = self._greedy(alive)
        self.best_count = len(seed)
        self.best_sel = seed
        proved = True
        try:
            self._dfs(alive, 0, [])
        except SearchBudgetExceeded:
            proved = False
        tiling = Tiling(tuple(self.tris[i] for i in self.best_sel))
        return SolveResult(optimum=self.best_count, tiling=tiling,
                           nodes_explored=self.nodes, proved_optimal=proved)

    def _dfs(self, alive: list[int], count: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"packing search exceeded {self.budget} nodes")
        if count > self.best_count:
            self.best_count = count
            self.best_sel = list(chosen)
        if not alive:
            return
        if count + self._bound(alive) <= self.best_count:
            return
        support = 0
        for i in alive:
            support |= self.masks[i]
        v = (support & -support).bit_length() - 1
        vbit = 1 << v
        for i in alive:
            if self.masks[i] & vbit:
                m = self.masks[i]
                chosen.append(i)
                self._dfs([j for j in alive if self.masks[j] & m == 0], count + 1, chosen)
                chosen.pop()
        self._dfs([j for j in alive if not self.masks[j] & vbit], count, chosen)

    def _bound(self, alive: list[int]) -> int:
        support = 0
        for i in alive:
            support |= self.masks[i]
        count_bound = support.bit_count() // 3
        return min(count_bound, self._scatter(alive, support), self._cover(alive))

    def _scatter(self, alive: list[int], support: int) -> int:
        partners: dict[int, int] = {}
        for i in alive:
            m = self.masks[i]
            for v in iter_bits(m):
                partners[v] = partners.get(v, 0) | (m ^ (1 << v))
        order = sorted(partners, key=lambda v: (partners[v].bit_count(), v))
        independent = 0
        for v in order:
            if partners[v] & independent == 0:
                independent |= 1 << v
        return (support & ~independent).bit_count() // 2

    def _cover(self, alive: list[int]) -> int:
        remaining = alive
        picks = 0
        while remaining:
            counts: dict[int, int] = {}
            for i in remaining:
                for v in iter_bits(self.masks[i]):
                    counts[v] = counts.get(v, 0) + 1
            best = min(counts, key=lambda v: (-counts[v], v))
            bit = 1 << best
            remaining = [i for i in remaining if not self.masks[i] & bit]
            picks += 1
        return picks

    def _greedy(self, alive: list[int]) -> list[int]:
        chosen = []
        alive = list(alive)
        while alive:
            deg: dict[int, int] = {}
            for i in alive:
                for v in iter_bits(self.masks[i]):
                    deg[v] = deg.get(v, 0) + 1
            pick = min(alive,
                       key=lambda i: (sum(deg[v] for v in iter_bits(self.masks[i])), i))
            chosen.append(pick)
            m = self.masks[pick]
            alive = [i for i in alive if self.masks[i] & m == 0]
        return chosen


def max_mixed_tiling(g: ColouredGraph, budget: Optional[int] = None) -> SolveResult:
    """Largest family of disjoint monochromatic triangles, colours mixed freely."""
    budget = DEFAULT_NODE_BUDGET if budget is None else budget
    return _PackingSearch(g.mono_triangles(), budget).run()


def max_single_colour_tiling(g: ColouredGraph, budget: Optional[int] = None) -> SolveResult:
    """Largest family of disjoint triangles all sharing one colour.

    Runs one packing search per colour (each with its own node budget) and
    keeps the best; ties go to the lower colour.  ``proved_optimal`` requires
    every per-colour search to finish, since an unfinished loser could still
    overtake the winner.
    """
    budget = DEFAULT_NODE_BUDGET if budget is None else budget
    tris = g.mono_triangles()
    best: Optional[SolveResult] = None
    nodes = 0
    all_proved = True
    for c in range(g.r):
        res = _PackingSearch([t for t in tris if t.colour == c], budget).run()
        nodes += res.nodes_explored
        all_proved = all_proved and res.proved_optimal
        if best is None or res.optimum > best.optimum:
            best = res
    assert best is not None
    return SolveResult(optimum=best.optimum, tiling=best.tiling,
                       nodes_explored=nodes, proved_optimal=all_proved)


# ---------------------------------------------------------------------------
# Colour-blind perfect clique tilings and the degree interpolation.

def _perfect_masks(n: int, adj: Sequence[int], t: int, budget: int) -> Optional[list[tuple[int, ...]]]:
    """Partition ``0..n-1`` into cliques of size ``t`` over the adjacency masks.

    Branches on the unused vertex with the fewest remaining candidates (the
    scan that finds it doubles as a dead-end prune: any vertex left with
    fewer than ``t - 1`` live neighbours kills the node), extending it by
    every K_{t-1} in its neighbourhood in rank-lexicographic order.  Returns
    None only after an exhaustive search.
    """
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    rank = {v: i for i, v in enumerate(order)}
    prefix = []
    seen = 0
    for v in order:
        seen |= 1 << v
        prefix.append(seen)
    calls = 0

    def cliques(cand: int, size: int) -> Iterator[tuple[int, ...]]:
        if size == 0:
            yield ()
            return
        for i in range(n):
            v = order[i]
            if (cand >> v) & 1:
                rest = cand & adj[v] & ~prefix[i]
                for tail in cliques(rest, size - 1):
                    yield (v,) + tail

    def dfs(used: int, acc: list[tuple[int, ...]]) -> bool:
        nonlocal calls
        calls += 1
        if calls > budget:
            raise SearchBudgetExceeded(f"perfect tiling search exceeded {budget} nodes")
        if used == (1 << n) - 1:
            return True
        pick = None
        for w in range(n):
            if (used >> w) & 1:
                continue
            live = (adj[w] & ~used).bit_count()
            if live < t - 1:
                return False
            key = (live, rank[w])
            if pick is None or key < pick:
                pick, v = key, w
        cand = adj[v] & ~used
        for tail in cliques(cand, t - 1):
            tile = (v,) + tail
            acc.append(tile)
            if dfs(used | sum(1 << w for w in tile), acc):
                return True
            acc.pop()
        return False

    acc: list[tuple[int, ...]] = []
    return acc if dfs(0, acc) else None


def find_perfect_clique_tiling(g: ColouredGraph, t: int,
                               budget: Optional[int] = None) -> Optional[Tiling]:
    """Exact perfect partition of the vertex set into K_t's, colours ignored.

    Returns None when no perfect tiling exists (proven by exhaustion) and
    raises SearchBudgetExceeded when the budget ran out first.
    """
    if t < 2:
        raise ValueError(f"clique size must be at least 2, got {t}")
    if g.n % t != 0:
        raise ValueError(f"perfect {t}-tiling needs t | n, got n={g.n}")
    budget = DEFAULT_TILING_BUDGET if budget is None else budget
    tiles = _perfect_masks(g.n, g.adj, t, budget)
    if tiles is None:
        return None
    return Tiling(tuple(MonoClique(tuple(sorted(tile)), None) for tile in tiles))


def _quota_masks(n: int, adj: Sequence[int], t: int, whole: int, stripped: int,
                 budget: int) -> Optional[tuple[list[tuple[int, ...]], list[tuple[int, ...]]]]:
    """Partition ``0..n-1`` into ``whole`` K_t's plus ``stripped`` K_{t-1}'s.

    Same fail-first engine as :func:`_perfect_masks` with a second tile size
    under an exact quota.  Searching the two sizes directly avoids the
    padded-graph encoding, whose interchangeable pad vertices blow the
    branching up by a factorial factor.
    """
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    rank = {v: i for i, v in enumerate(order)}
    prefix = []
    seen = 0
    for v in order:
        seen |= 1 << v
        prefix.append(seen)
    calls = 0

    def cliques(cand: int, size: int) -> Iterator[tuple[int, ...]]:
        if size == 0:
            yield ()
            return
        for i in range(n):
            v = order[i]
            if (cand >> v) & 1:
                rest = cand & adj[v] & ~prefix[i]
                for tail in cliques(rest, size - 1):
                    yield (v,) + tail

    def dfs(used: int, wq: int, sq: int) -> bool:
        nonlocal calls
        calls += 1
        if calls > budget:
            raise SearchBudgetExceeded(f"quota tiling search exceeded {budget} nodes")
        if used == (1 << n) - 1:
            return True
        floor_live = t - 1 if sq == 0 else t - 2
        pick = None
        for w in range(n):
            if (used >> w) & 1:
                continue
            live = (adj[w] & ~used).bit_count()
            if live < floor_live:
                return False
            key = (live, rank[w])
            if pick is None or key < pick:
                pick, v = key, w
        cand = adj[v] & ~used
        for size, quota in ((t, wq), (t - 1, sq)):
            if not quota:
                continue
            for tail in cliques(cand, size - 1):
                tile = (v,) + tail
                target = acc_whole if size == t else acc_stripped
                target.append(tile)
                if dfs(used | sum(1 << w for w in tile),
                       wq - (size == t), sq - (size == t - 1)):
                    return True
                target.pop()
        return False

    acc_whole: list[tuple[int, ...]] = []
    acc_stripped: list[tuple[int, ...]] = []
    return (acc_whole, acc_stripped) if dfs(0, whole, stripped) else None


def clique_tiling_interpolated(g: ColouredGraph, t: int,
                               budget: Optional[int] = None) -> tuple[Tiling, Tiling]:
    """Disjoint K_t's and K_{t-1}'s interpolating between two tiling regimes.

    For ``(1 - 1/(t-1)) n <= delta <= (1 - 1/t) n`` (checked exactly),
    partitions the vertex set into ``(t-1)delta - (t-2)n`` whole K_t's and
    ``(t-1)n - t*delta`` leftover K_{t-1}'s.  Such a partition always exists:
    adding one virtual vertex per K_{t-1}, joined to everything real, yields
    a graph meeting the exact minimum-degree threshold for a perfect K_t
    tiling.  A failed search is therefore an anomaly, not a None.
    """
    if t < 3:
        raise ValueError(f"interpolation needs t >= 3, got {t}")
    delta = g.min_degree()
    n = g.n
    if not (n * (t - 2) <= delta * (t - 1) and t * delta <= (t - 1) * n):
        raise ValueError(
            f"interpolation needs (1-1/(t-1))n <= delta <= (1-1/t)n, "
            f"got n={n}, delta={delta}, t={t}")
    budget = DEFAULT_TILING_BUDGET if budget is None else budget
    found = _quota_masks(g.n, g.adj, t, (t - 1) * delta - (t - 2) * n,
                         (t - 1) * n - t * delta, budget)
    if found is None:
        raise AnomalyError(
            "host meets the interpolated tiling degree threshold but the "
            "exhaustive search found no tiling", graph=g,
            detail={"t": t, "stripped": (t - 1) * n - t * delta})
    whole = [MonoClique(tuple(sorted(tile)), None) for tile in found[0]]
    stripped = [MonoClique(tuple(sorted(tile)), None) for tile in found[1]]
    return Tiling(tuple(whole)), Tiling(tuple(stripped))


def find_bowtie(g: ColouredGraph, forbidden: Sequence[int] = ()) -> Optional[Bowtie]:
    """First pair of different-coloured mono triangles sharing one vertex.

    Scans triangle pairs in lexicographic order, skipping any triangle that
    touches ``forbidden``; None when the graph has no such bowtie.
    """
    banned = 0
    for v in forbidden:
        banned |= 1 << v
    tris = [t for t in g.mono_triangles() if not t.mask & banned]
    for i, first in enumerate(tris):
        for second in tris[i + 1:]:
            if first.colour == second.colour:
                continue
            if (first.mask & second.mask).bit_count() == 1:
                return Bowtie(first, second)
    return None
