"""
Path fragments for greedy edge sweeps.

Both the greedy cycle cover and greedy string compression process edges by
decreasing overlap, ties broken by the smallest (source, target) pair, and keep
track of which vertices already sit on a common path.
"""
from __future__ import annotations

from typing import Iterator, List, Tuple

import numpy as np


def edges_by_overlap(ov: np.ndarray) -> Iterator[Tuple[int, int]]:
    """Off-diagonal (i, j) ordered by overlap descending, then i, then j."""
    n = ov.shape[0]
    src, dst = np.nonzero(~np.eye(n, dtype=bool))
    keys = np.lexsort((dst, src, -ov[src, dst]))
    for k in keys:
        yield int(src[k]), int(dst[k])


class Fragments:
    """Union-find over vertices plus successor / predecessor slots."""

    def __init__(self, n: int):
        self.succ: List[int] = [-1] * n
        self.pred: List[int] = [-1] * n
        self._parent = list(range(n))
        self._size = [1] * n

    def find(self, v: int) -> int:
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def size(self, v: int) -> int:
        return self._size[self.find(v)]

    def free(self, i: int, j: int) -> bool:
        return self.succ[i] == -1 and self.pred[j] == -1

    def same(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def link(self, i: int, j: int) -> None:
        self.succ[i] = j
        self.pred[j] = i
        a, b = self.find(i), self.find(j)
        if a != b:
            if self._size[a] < self._size[b]:
                a, b = b, a
            self._parent[b] = a
            self._size[a] += self._size[b]

    def heads(self) -> List[int]:
        """Start vertices of open paths, in increasing order."""
        return [v for v, p in enumerate(self.pred) if p == -1]

    def path_from(self, head: int) -> List[int]:
        path = [head]
        v = self.succ[head]
        while v != -1 and v != head:
            path.append(v)
            v = self.succ[v]
        return path
