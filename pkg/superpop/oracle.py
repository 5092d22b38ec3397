"""
Brute-force reference implementations used as ground truth in tests and by
the ``oracle`` command. They stay direct transcriptions of the definitions and
refuse inputs beyond hard size limits.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

from superpop.assembly.overlapgraph import PrefixGraph
from superpop.exceptions import CapacityError, InputError
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

DEFAULT_SSP_LIMIT = 12
DEFAULT_PERMUTATION_LIMIT = 7
DEFAULT_COVER_LIMIT = 8


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Optional[Any] = None


def naive_period(s: str) -> int:
    if not s:
        raise InputError("empty sequence")
    for p in range(1, len(s) + 1):
        if all(s[i] == s[i + p] for i in range(len(s) - p)):
            return p
    return len(s)


def naive_overlap(u: str, v: str) -> int:
    if not u or not v:
        raise InputError("empty sequence")
    for k in range(min(len(u), len(v)), 0, -1):
        if u[len(u) - k:] == v[:k]:
            return k
    return 0


def remove_contained(strings: Sequence[str]) -> List[str]:
    """Drop duplicates and strings that are substrings of another, keeping input order."""
    distinct = list(dict.fromkeys(strings))
    return [s for s in distinct if not any(s != t and s in t for t in distinct)]


def _merge(order: Sequence[str]) -> str:
    out = order[0]
    for prev, s in zip(order, order[1:]):
        out += s[naive_overlap(prev, s):]
    return out


@debug_log
def exact_ssp(strings: Sequence[str], limit: int = DEFAULT_SSP_LIMIT, witness: bool = True) -> OracleResult:
    """Shortest superstring length by DP over (subset, last string)."""
    items = remove_contained(strings)
    if not items:
        raise InputError("no strings")
    k = len(items)
    if k > limit:
        raise CapacityError("exact superstring oracle strings", k, limit)

    ov = [[naive_overlap(a, b) if i != j else 0 for j, b in enumerate(items)] for i, a in enumerate(items)]
    full = (1 << k) - 1
    inf = float("inf")
    best = [[inf] * k for _ in range(1 << k)]
    back = [[-1] * k for _ in range(1 << k)]
    for i in range(k):
        best[1 << i][i] = len(items[i])
    for mask in range(1, full + 1):
        for last in range(k):
            cur = best[mask][last]
            if cur == inf:
                continue
            for nxt in range(k):
                if mask & (1 << nxt):
                    continue
                nmask = mask | (1 << nxt)
                cand = cur + len(items[nxt]) - ov[last][nxt]
                if cand < best[nmask][nxt]:
                    best[nmask][nxt] = cand
                    back[nmask][nxt] = last

    last = min(range(k), key=lambda i: best[full][i])
    value = int(best[full][last])
    if not witness:
        return OracleResult(value)

    order = []
    mask = full
    while last != -1:
        order.append(last)
        prev = back[mask][last]
        mask ^= 1 << last
        last = prev
    order.reverse()
    text = items[order[0]]
    for a, b in zip(order, order[1:]):
        text += items[b][ov[a][b]:]
    return OracleResult(value, text)


def exact_ssp_by_permutation(strings: Sequence[str], limit: int = DEFAULT_PERMUTATION_LIMIT) -> OracleResult:
    """Same optimum by trying every order; only for cross-checking the DP."""
    items = remove_contained(strings)
    if not items:
        raise InputError("no strings")
    if len(items) > limit:
        raise CapacityError("permutation superstring oracle strings", len(items), limit)
    best = min((_merge(p) for p in itertools.permutations(items)), key=len)
    return OracleResult(len(best), best)


@debug_log
def brute_cycle_cover(g: PrefixGraph, limit: int = DEFAULT_COVER_LIMIT) -> OracleResult:
    """Minimum weight over every fixed-point-free permutation."""
    n = g.order
    if n < 2:
        raise InputError("a cycle cover without self-loops needs at least two vertices")
    if n > limit:
        raise CapacityError("brute-force cycle cover vertices", n, limit)
    w = g.weights.tolist()
    best_value, best_perm = None, None
    for perm in itertools.permutations(range(n)):
        if any(perm[i] == i for i in range(n)):
            continue
        value = sum(w[i][perm[i]] for i in range(n))
        if best_value is None or value < best_value:
            best_value, best_perm = value, perm

    cycles, seen = [], set()
    for v in range(n):
        if v in seen:
            continue
        cycle = []
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = best_perm[v]
        cycles.append(cycle)
    return OracleResult(int(best_value), cycles)
