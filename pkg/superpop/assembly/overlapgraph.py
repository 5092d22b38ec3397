"""
Prefix graph: complete weighted digraph on the reads, weight(i, j) = |pref(s_i, s_j)|.

Two backends compute the same matrix:

* ``naive``   - one KMP overlap per ordered pair, O(n^2 * m);
* ``indexed`` - all pairs at once from a shared Aho-Corasick keyword index.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from superpop.exceptions import CapacityError, InputError
from superpop.parallel import map_partitions, partition
from superpop.reads.readset import ReadSet
from superpop.strings.ahocorasick import KeywordIndex
from superpop.strings.core import overlap
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

FORBIDDEN = -1

DEFAULT_INDEXED_THRESHOLD = 64
DEFAULT_MAX_VERTICES = 5000


@dataclass(frozen=True)
class PrefixGraph:
    weights: np.ndarray
    m: int
    labels: List[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return int(self.weights.shape[0])

    def weight(self, i: int, j: int) -> int:
        return int(self.weights[i, j])

    def overlap(self, i: int, j: int) -> int:
        return self.m - self.weight(i, j)

    def cycle_weight(self, cycle: Sequence[int]) -> int:
        return sum(self.weight(a, b) for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]))

    def dump_tsv(self, target: Union[str, Path, TextIO]) -> None:
        """Debug dump: header row of labels, then one labelled row per vertex."""
        lines = ["\t".join(["vertex"] + [str(l) for l in self.labels])]
        for label, row in zip(self.labels, self.weights.tolist()):
            lines.append("\t".join([str(label)] + [str(w) for w in row]))
        text = "\n".join(lines) + "\n"
        if isinstance(target, (str, Path)):
            Path(target).write_text(text, encoding="utf-8")
        else:
            target.write(text)


# ---------------------------------------------------------------------------
# Overlap matrices (general lengths; shared with the compression step)
# ---------------------------------------------------------------------------

def _naive_rows(task: Tuple[Tuple[str, ...], range]) -> np.ndarray:
    strings, rows = task
    out = np.zeros((len(rows), len(strings)), dtype=np.int64)
    for r, i in enumerate(rows):
        u = strings[i]
        for j, v in enumerate(strings):
            if i != j:
                out[r, j] = overlap(u, v)
    return out


def _indexed_rows(task: Tuple[Tuple[str, ...], range]) -> np.ndarray:
    strings, rows = task
    index = KeywordIndex(strings)
    _log.debug("Keyword index over %d strings: %d states", len(index), index.n_states)
    order = np.asarray(index.order, dtype=np.int64)
    out = np.zeros((len(rows), len(strings)), dtype=np.int64)
    ranked = np.zeros(len(strings), dtype=np.int64)
    for r, i in enumerate(rows):
        ranked[:] = 0
        # deepest first, so each rank interval keeps its first (longest) overlap
        for state in index.suffix_states(index.state_after(strings[i])):
            lo, hi = index.span[state]
            np.maximum(ranked[lo:hi], index.depth[state], out=ranked[lo:hi])
        out[r, order] = ranked
        out[r, i] = 0
    return out


_ROW_BACKENDS = {"naive": _naive_rows, "indexed": _indexed_rows}


def overlap_matrix(strings: Sequence[str], backend: str = "indexed", workers: int = 1) -> np.ndarray:
    """n x n matrix of |ov(s_i, s_j)| with a zero diagonal."""
    if backend not in _ROW_BACKENDS:
        raise InputError(f"unknown overlap backend '{backend}'")
    strings = tuple(strings)
    if not strings:
        return np.zeros((0, 0), dtype=np.int64)
    tasks = [(strings, rows) for rows in partition(range(len(strings)), max(1, workers))]
    blocks = map_partitions(_ROW_BACKENDS[backend], tasks, workers)
    return np.vstack(blocks)


# ---------------------------------------------------------------------------
# Prefix graph construction
# ---------------------------------------------------------------------------

def _check_size(rs: ReadSet, max_vertices: Optional[int]) -> None:
    if rs.n < 2:
        raise InputError("prefix graph needs at least two distinct reads")
    if max_vertices is not None and rs.n > max_vertices:
        raise CapacityError("prefix graph vertices", rs.n, max_vertices)


def _graph(rs: ReadSet, ov: np.ndarray) -> PrefixGraph:
    weights = rs.m - ov
    np.fill_diagonal(weights, FORBIDDEN)
    return PrefixGraph(weights=weights, m=rs.m, labels=list(range(rs.n)))


@debug_log
def build_naive(rs: ReadSet, workers: int = 1, max_vertices: Optional[int] = DEFAULT_MAX_VERTICES) -> PrefixGraph:
    _check_size(rs, max_vertices)
    return _graph(rs, overlap_matrix(rs.reads, "naive", workers))


@debug_log
def build_indexed(rs: ReadSet, workers: int = 1, max_vertices: Optional[int] = DEFAULT_MAX_VERTICES) -> PrefixGraph:
    _check_size(rs, max_vertices)
    return _graph(rs, overlap_matrix(rs.reads, "indexed", workers))


def build(rs: ReadSet, backend: str = "auto", workers: int = 1,
          indexed_threshold: int = DEFAULT_INDEXED_THRESHOLD,
          max_vertices: Optional[int] = DEFAULT_MAX_VERTICES) -> PrefixGraph:
    """Pick the backend: indexed above the threshold, naive below, unless forced."""
    if backend == "auto":
        backend = "indexed" if rs.n > indexed_threshold else "naive"
    _log.info("Building prefix graph on %d reads (%s backend, ~%.1f MiB)",
              rs.n, backend, rs.n * rs.n * 8 / 2**20)
    if backend == "naive":
        return build_naive(rs, workers, max_vertices)
    if backend == "indexed":
        return build_indexed(rs, workers, max_vertices)
    raise InputError(f"unknown graph backend '{backend}'")
