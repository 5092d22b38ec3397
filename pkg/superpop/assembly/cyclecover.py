"""
Minimum-weight cycle covers of the prefix graph, without self-loops.

The period of a cycle is its total edge weight. Small cycles are those with
period <= floor(m * alpha).
"""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from superpop.analysis.periodstats import Number, small_limit
from superpop.assembly.fragments import Fragments, edges_by_overlap
from superpop.assembly.overlapgraph import PrefixGraph
from superpop.exceptions import CapacityError, InputError, InvalidCoverError
from superpop.strings.core import smallest_period
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

DEFAULT_EXACT_MAX_VERTICES = 2000


@dataclass(frozen=True)
class CycleCover:
    cycles: List[List[int]]
    per_cycle_weight: List[int]
    backend: str = "exact"

    @property
    def total_weight(self) -> int:
        return sum(self.per_cycle_weight)

    @property
    def periods(self) -> List[int]:
        return list(self.per_cycle_weight)

    def successor(self) -> Dict[int, int]:
        succ = {}
        for cycle in self.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                succ[a] = b
        return succ

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "wt_C": self.total_weight,
            "cycles": [list(c) for c in self.cycles],
            "weights": list(self.per_cycle_weight),
        }


@dataclass(frozen=True)
class CycleClasses:
    small: List[int] = field(default_factory=list)   # indices into cover.cycles
    large: List[int] = field(default_factory=list)
    limit: int = 0

    @property
    def n_small(self) -> int:
        return len(self.small)

    @property
    def n_large(self) -> int:
        return len(self.large)


def _cycles_from_successors(succ: Sequence[int]) -> List[List[int]]:
    """Each cycle starts at its smallest vertex; cycles ordered by that vertex."""
    seen = [False] * len(succ)
    cycles = []
    for v in range(len(succ)):
        if seen[v]:
            continue
        cycle = []
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = int(succ[v])
        cycles.append(cycle)
    return cycles


def _cover(g: PrefixGraph, succ: Sequence[int], backend: str) -> CycleCover:
    cycles = _cycles_from_successors(succ)
    return CycleCover(cycles=cycles, per_cycle_weight=[g.cycle_weight(c) for c in cycles], backend=backend)


def _check_order(g: PrefixGraph) -> None:
    if g.order < 2:
        raise InputError("a cycle cover without self-loops needs at least two vertices")


def _tight_columns(cost: np.ndarray, succ: Sequence[int]) -> List[List[int]]:
    """
    For each row, the columns (ascending) it may take in some optimal assignment.

    Moving row i onto the column held by row r changes the cost by
    cost[i, succ[r]] - cost[i, succ[i]]. The assignment is optimal, so this
    exchange graph has no negative cycle and shortest-path potentials exist.
    Exactly the moves with zero reduced cost lie on zero-cost exchange cycles.
    """
    n = len(succ)
    cols = np.asarray(succ, dtype=np.int64)
    own = cost[np.arange(n), cols]
    delta = cost[:, cols] - own[:, None]
    dist = np.zeros(n, dtype=np.int64)
    for _ in range(n):
        relaxed = np.minimum(dist, (dist[:, None] + delta).min(axis=0))
        if np.array_equal(relaxed, dist):
            break
        dist = relaxed
    tight = (delta + dist[:, None] - dist[None, :]) == 0
    return [sorted(int(cols[r]) for r in np.flatnonzero(tight[i])) for i in range(n)]


def _rotation(i: int, j: int, succ: List[int], owner: List[int], allowed: List[List[int]]) -> Optional[List[int]]:
    """Rows after i that can pass columns along so row i takes column j; None if impossible."""
    start = owner[j]
    if start <= i:
        return None
    parent = {start: -1}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for k in allowed[x]:
            if k == succ[i]:
                chain = []
                while x != -1:
                    chain.append(x)
                    x = parent[x]
                return chain[::-1]
            r = owner[k]
            if r > i and r not in parent:
                parent[r] = x
                queue.append(r)
    return None


def _lexicographic_optimum(cost: np.ndarray, succ: Sequence[int]) -> List[int]:
    """Among equal-weight assignments, the one with the smallest successor sequence."""
    succ = list(succ)
    owner = [0] * len(succ)
    for r, c in enumerate(succ):
        owner[c] = r
    allowed = _tight_columns(cost, succ)
    for i in range(len(succ)):
        for j in allowed[i]:
            if j >= succ[i]:
                break
            chain = _rotation(i, j, succ, owner, allowed)
            if chain is None:
                continue
            # row i takes j, each chained row takes the next one's column, the last takes succ[i]
            taken = [j] + [succ[r] for r in chain[1:]] + [succ[i]]
            for r, c in zip([i] + chain, taken):
                succ[r] = c
                owner[c] = r
            break
    return succ


@debug_log
def exact_cover(g: PrefixGraph, max_vertices: Optional[int] = DEFAULT_EXACT_MAX_VERTICES) -> CycleCover:
    """Minimum-cost fixed-point-free assignment (diagonal priced out of reach)."""
    _check_order(g)
    if max_vertices is not None and g.order > max_vertices:
        raise CapacityError("exact cycle cover vertices", g.order, max_vertices)
    cost = g.weights.astype(np.int64, copy=True)
    # any derangement costs at most n * max weight
    np.fill_diagonal(cost, int(cost.max()) * g.order + 1)
    rows, cols = linear_sum_assignment(cost)
    succ = [0] * g.order
    for r, c in zip(rows.tolist(), cols.tolist()):
        succ[r] = c
    succ = _lexicographic_optimum(cost, succ)
    cover = _cover(g, succ, "exact")
    _log.debug("Exact cover: %d cycles, wt(C)=%d", len(cover.cycles), cover.total_weight)
    return cover


@debug_log
def greedy_cover(g: PrefixGraph) -> CycleCover:
    """Commit largest-overlap edges with free endpoints.

    A cycle is closed only if that leaves zero or at least two vertices on open
    paths; whatever is still open after the sweep is chained into one last cycle.
    """
    _check_order(g)
    n = g.order
    ov = g.m - g.weights
    frag = Fragments(n)
    open_count = n
    for i, j in edges_by_overlap(ov):
        if open_count == 0:
            break
        if not frag.free(i, j):
            continue
        if frag.same(i, j):
            size = frag.size(i)
            if open_count - size == 1:
                continue
            frag.link(i, j)
            open_count -= size
        else:
            frag.link(i, j)

    leftover = [v for head in frag.heads() for v in frag.path_from(head)]
    if leftover:
        _log.debug("Greedy cover: chaining %d leftover vertices into one cycle", len(leftover))
        for a, b in zip(leftover, leftover[1:] + leftover[:1]):
            if frag.succ[a] == -1:
                frag.link(a, b)
    cover = _cover(g, frag.succ, "greedy")
    _log.debug("Greedy cover: %d cycles, wt(C)=%d", len(cover.cycles), cover.total_weight)
    return cover


def classify(cover: CycleCover, m: int, alpha: Number) -> CycleClasses:
    """Small iff period <= floor(m * alpha)."""
    limit = small_limit(m, alpha)
    small = [k for k, w in enumerate(cover.per_cycle_weight) if w <= limit]
    large = [k for k, w in enumerate(cover.per_cycle_weight) if w > limit]
    return CycleClasses(small=small, large=large, limit=limit)


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------

def validate_cover(cover: CycleCover, g: PrefixGraph) -> None:
    """Cycles partition the vertices, have >= 2 vertices and recorded weights match."""
    seen = Counter(v for c in cover.cycles for v in c)
    if sorted(seen) != list(range(g.order)) or any(k != 1 for k in seen.values()):
        raise InvalidCoverError("cycles do not partition the vertex set")
    for cycle, w in zip(cover.cycles, cover.per_cycle_weight):
        if len(cycle) < 2:
            raise InvalidCoverError(f"cycle {cycle} has fewer than two vertices")
        if g.cycle_weight(cycle) != w:
            raise InvalidCoverError(f"cycle {cycle} weight {w} != recomputed {g.cycle_weight(cycle)}")
    if len(cover.per_cycle_weight) != len(cover.cycles):
        raise InvalidCoverError("one weight per cycle expected")


def check_period_bounds(cover: CycleCover, reads: Sequence[str]) -> None:
    """
    A cycle's period is at least the smallest period of every read on it, and
    at most half the reads of period <= i can sit on cycles of period <= i.
    """
    periods = [smallest_period(r) for r in reads]
    for cycle, w in zip(cover.cycles, cover.per_cycle_weight):
        worst = max(periods[v] for v in cycle)
        if w < worst:
            raise InvalidCoverError(f"cycle {cycle} has period {w} below read period {worst}")

    m = max(len(r) for r in reads)
    reads_upto = np.cumsum(np.bincount(periods, minlength=m + 1))
    cycles_upto = np.cumsum(np.bincount([min(w, m + 1) for w in cover.per_cycle_weight], minlength=m + 2))
    for i in range(1, m + 1):
        if 2 * cycles_upto[i] > reads_upto[i]:
            raise InvalidCoverError(
                f"{cycles_upto[i]} cycles of period <= {i} but only {reads_upto[i]} reads of period <= {i}"
            )
