"""
Superstring pipeline: histogram -> alpha -> prefix graph -> cycle cover ->
one unrolled string per cycle -> greedy compression -> verified superstring.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from superpop.analysis import periodstats
from superpop.analysis.periodstats import GREEDY_C, Number
from superpop.assembly import cyclecover, overlapgraph
from superpop.assembly.fragments import Fragments, edges_by_overlap
from superpop.exceptions import InputError
from superpop.parallel import map_partitions, partition
from superpop.reads.readset import ReadSet
from superpop.strings.ahocorasick import KeywordIndex
from superpop.strings.core import prefix_len
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)


@dataclass
class AssemblyStats:
    n: int
    m: int
    alpha: float
    c: float
    wt_C: int = 0
    cycles_small: int = 0
    cycles_large: int = 0
    w_sigma_len: int = 0
    tau_len: int = 0
    beta_bound: float = 0.0
    sp: float = 0.0
    perc: float = 0.0
    w_sigma_bound: float = 0.0
    contained_dropped: int = 0
    cover_backend: str = "exact"
    degenerate: bool = False
    opt: Optional[int] = None
    tau_bound: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Assembly:
    sigma_strings: List[str]
    tau: str
    stats: AssemblyStats
    cycles: List[List[int]] = field(default_factory=list)
    graph: Optional[overlapgraph.PrefixGraph] = None
    cover: Optional[cyclecover.CycleCover] = None

    @property
    def w_sigma_len(self) -> int:
        return sum(len(s) for s in self.sigma_strings)


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    checked: int
    missing: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checked": self.checked, "missing": list(self.missing)}


# ---------------------------------------------------------------------------
# Per-cycle strings
# ---------------------------------------------------------------------------

def representative(cycle: Sequence[int], rs: Optional[ReadSet] = None) -> int:
    """The read with the smallest input index on the cycle."""
    if not cycle:
        raise InputError("empty cycle")
    return min(cycle)


def build_sigma(cycle: Sequence[int], rep: int, rs: ReadSet,
                graph: Optional[overlapgraph.PrefixGraph] = None) -> str:
    """pref(r, next) . ... . pref(last, r) followed by r itself."""
    if rep not in cycle:
        raise InputError(f"representative {rep} is not on cycle {list(cycle)}")
    start = list(cycle).index(rep)
    order = list(cycle[start:]) + list(cycle[:start])
    parts = []
    for a, b in zip(order, order[1:] + order[:1]):
        w = graph.weight(a, b) if graph is not None else prefix_len(rs[a], rs[b])
        parts.append(rs[a][:w])
    parts.append(rs[rep])
    return "".join(parts)


def _sigma_block(task: Tuple[ReadSet, Sequence[List[int]]]) -> List[str]:
    rs, cycles = task
    return [build_sigma(c, representative(c, rs), rs) for c in cycles]


# ---------------------------------------------------------------------------
# Compression
# ---------------------------------------------------------------------------

def containment_filter(strings: Sequence[str]) -> Tuple[List[str], int]:
    """Drop strings contained in another one (first copy of duplicates survives)."""
    index = KeywordIndex(strings)
    dropped = set()
    for idx, s in enumerate(strings):
        for k in index.find_all(s):
            if k == idx:
                continue
            if len(strings[k]) < len(s) or k > idx:
                dropped.add(k)
    kept = [s for i, s in enumerate(strings) if i not in dropped]
    return kept, len(dropped)


@debug_log
def greedy_compress(strings: Sequence[str], workers: int = 1) -> str:
    """Merge the pair with the largest overlap until one string remains."""
    if not strings:
        raise InputError("nothing to compress")
    items, dropped = containment_filter(strings)
    if dropped:
        _log.info("Containment filter dropped %d strings", dropped)
    if len(items) == 1:
        return items[0]

    ov = overlapgraph.overlap_matrix(items, "indexed", workers)
    frag = Fragments(len(items))
    joins = 0
    for i, j in edges_by_overlap(ov):
        if joins == len(items) - 1:
            break
        if frag.free(i, j) and not frag.same(i, j):
            frag.link(i, j)
            joins += 1

    head = frag.heads()[0]
    path = frag.path_from(head)
    parts = [items[path[0]]]
    for a, b in zip(path, path[1:]):
        parts.append(items[b][int(ov[a, b]):])
    return "".join(parts)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verify(tau: str, reads: Union[ReadSet, Sequence[str]]) -> VerifyReport:
    """Check with one multi-pattern scan that every read occurs in tau."""
    reads = list(reads)
    index = KeywordIndex(reads)
    found = index.find_all(tau)
    missing = list(dict.fromkeys(r for i, r in enumerate(reads) if i not in found))
    if missing:
        _log.warning("Superstring misses %d of %d reads", len(missing), len(reads))
    return VerifyReport(passed=not missing, checked=len(reads), missing=missing)


# ---------------------------------------------------------------------------
# End to end
# ---------------------------------------------------------------------------

def resolve_alpha(h: periodstats.PeriodHistogram, alpha: Union[str, Number, None], c: Number) -> Number:
    """'auto'/None minimises beta with the executed c; explicit values are clamped to (0, 1]."""
    if alpha is None or (isinstance(alpha, str) and alpha.lower() == "auto"):
        return Fraction(periodstats.select_alpha(periodstats.ratio_table(h, c)).period, h.m)
    if isinstance(alpha, str):
        alpha = Fraction(alpha)
    if alpha > 1:
        return Fraction(1)
    if alpha <= 0:
        return Fraction(1, h.m)
    return alpha


@debug_log
def assemble(rs: ReadSet, alpha: Union[str, Number, None] = "auto", c: Number = GREEDY_C,
             backend: str = "exact", workers: int = 1, opt: Optional[int] = None,
             graph_backend: str = "auto",
             indexed_threshold: int = overlapgraph.DEFAULT_INDEXED_THRESHOLD,
             max_vertices: Optional[int] = overlapgraph.DEFAULT_MAX_VERTICES,
             exact_max_vertices: Optional[int] = cyclecover.DEFAULT_EXACT_MAX_VERTICES) -> Assembly:
    """Run the cycle-cover pipeline on a deduplicated read set.

    A single distinct read is returned as its own superstring (degenerate case).
    """
    if len(set(rs.reads)) != rs.n:
        raise InputError("assemble expects a deduplicated read set")
    h = periodstats.histogram(rs, workers)
    a = resolve_alpha(h, alpha, c)
    row = periodstats.ratio_row(h, a, c)
    stats = AssemblyStats(n=rs.n, m=rs.m, alpha=float(a), c=float(c), cover_backend=backend,
                          beta_bound=row.beta, sp=row.sp, perc=row.perc, opt=opt)

    if rs.n == 1:
        _log.warning("Only one distinct read; it is its own superstring")
        stats.degenerate = True
        stats.w_sigma_len = stats.tau_len = rs.m
        return Assembly(sigma_strings=[rs[0]], tau=rs[0], stats=stats)

    graph = overlapgraph.build(rs, graph_backend, workers, indexed_threshold, max_vertices)
    if backend == "exact":
        cover = cyclecover.exact_cover(graph, exact_max_vertices)
    elif backend == "greedy":
        cover = cyclecover.greedy_cover(graph)
    else:
        raise InputError(f"unknown cover backend '{backend}'")
    cyclecover.validate_cover(cover, graph)
    cyclecover.check_period_bounds(cover, rs.reads)
    classes = cyclecover.classify(cover, rs.m, a)
    _log.info("Cycle cover (%s): %d cycles, wt(C)=%d, %d small at limit %d",
              backend, len(cover.cycles), cover.total_weight, classes.n_small, classes.limit)

    blocks = partition(cover.cycles, max(1, workers))
    sigmas = [s for block in map_partitions(_sigma_block, [(rs, b) for b in blocks], workers) for s in block]
    items, dropped = containment_filter(sigmas)
    tau = greedy_compress(items, workers)

    stats.wt_C = cover.total_weight
    stats.cycles_small = classes.n_small
    stats.cycles_large = classes.n_large
    stats.w_sigma_len = sum(len(s) for s in sigmas)
    stats.tau_len = len(tau)
    stats.contained_dropped = dropped
    stats.w_sigma_bound = periodstats.w_sigma_bound(cover.total_weight, a, row.sp, rs.m)
    if opt is not None:
        stats.tau_bound = periodstats.tau_bound(opt, a, row.sp, rs.m, c)
    return Assembly(sigma_strings=sigmas, tau=tau, stats=stats, cycles=[list(c) for c in cover.cycles],
                    graph=graph, cover=cover)
