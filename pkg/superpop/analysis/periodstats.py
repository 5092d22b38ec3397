"""
Read-period statistics and the guaranteed approximation ratio.

For a read set of n reads of length m with n(i) reads of smallest period i:

    sp(alpha)    = sum_{i <= floor(m*alpha)} n(i) / i
    perc(alpha)  = sp * m / n
    beta(alpha)  = 2 + c*(1 - alpha)/alpha + (c/2) * perc(alpha)

``c`` is the compression factor of the superstring compression step.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from superpop.exceptions import ArgumentError, InputError
from superpop.parallel import map_partitions, partition
from superpop.reads.readset import ReadSet
from superpop.strings.core import smallest_period
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

Number = Union[float, Fraction]

REFERENCE_C = Fraction(38, 63)
GREEDY_C = Fraction(1, 2)

# m*alpha for alpha = i/m must floor back to i despite rounding
_FLOOR_EPS = 1e-9


@dataclass(frozen=True)
class PeriodHistogram:
    m: int
    counts: Dict[int, int]
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise InputError("read length must be >= 1")
        for i, k in self.counts.items():
            if not 1 <= i <= self.m:
                raise InputError(f"period {i} outside [1, {self.m}]")
            if k < 0:
                raise InputError(f"negative count for period {i}")
        if sum(self.counts.values()) != self.n:
            raise InputError("histogram counts do not sum to n")

    def count(self, period: int) -> int:
        return self.counts.get(period, 0)

    def cumulative(self, period: int) -> int:
        return sum(k for i, k in self.counts.items() if i <= period)


@dataclass(frozen=True)
class RatioRow:
    period: int
    nbseq: int
    cum_nbseq: int
    alpha: float
    naive_bound: float
    large_term: float
    small_term: float
    beta: float
    c: float
    sp: float = 0.0
    perc: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PlotPoint:
    period: int
    count: int
    cum_sp: float
    v_line: float
    h_line: float


@dataclass(frozen=True)
class LowPeriodicityCheck:
    """Rows with lo < alpha < hi and whether sp stays under factor * n / m there."""
    lo: float
    hi: float
    factor: float
    threshold: float
    periods: List[int] = field(default_factory=list)
    max_sp: float = 0.0

    @property
    def holds(self) -> bool:
        return self.max_sp < self.threshold

    def to_dict(self) -> dict:
        d = asdict(self)
        d["holds"] = self.holds
        return d


# ---------------------------------------------------------------------------
# Histogram
# ---------------------------------------------------------------------------

def _count_periods(reads: Sequence[str]) -> Counter:
    return Counter(smallest_period(r) for r in reads)


@debug_log
def histogram(rs: Union[ReadSet, Sequence[str]], workers: int = 1, m: Optional[int] = None) -> PeriodHistogram:
    """counts[i] = number of reads whose smallest period is i."""
    reads = rs.reads if isinstance(rs, ReadSet) else tuple(rs)
    if not reads:
        raise InputError("no usable reads")
    m = rs.m if isinstance(rs, ReadSet) else (m or len(reads[0]))
    total: Counter = Counter()
    for partial in map_partitions(_count_periods, partition(reads, max(1, workers) * 4), workers):
        total.update(partial)
    return PeriodHistogram(m=m, counts=dict(sorted(total.items())), n=len(reads))


# ---------------------------------------------------------------------------
# Ratio arithmetic
# ---------------------------------------------------------------------------

def _check_alpha(alpha: Number) -> float:
    if not 0 < alpha <= 1:
        raise ArgumentError(f"alpha={alpha} must lie in (0, 1]")
    return float(alpha)


def _check_c(c: Number) -> float:
    if not 0 < c <= 1:
        raise ArgumentError(f"compression factor c={c} must lie in (0, 1]")
    return float(c)


def small_limit(m: int, alpha: Number) -> int:
    """floor(m * alpha), inclusive boundary; exact for Fractions."""
    if isinstance(alpha, Fraction):
        return min(m, math.floor(m * alpha))
    return min(m, math.floor(m * alpha + _FLOOR_EPS))


def sp(h: PeriodHistogram, alpha: Number) -> float:
    """Sum of n(i)/i over periods i <= floor(m * alpha)."""
    _check_alpha(alpha)
    limit = small_limit(h.m, alpha)
    return math.fsum(k / i for i, k in sorted(h.counts.items()) if i <= limit)


def perc_alpha(h: PeriodHistogram, alpha: Number) -> float:
    """sp expressed as a multiple of n / m."""
    return sp(h, alpha) * h.m / h.n


def ratio_row(h: PeriodHistogram, alpha: Number, c: Number, period: Optional[int] = None) -> RatioRow:
    a = _check_alpha(alpha)
    cf = _check_c(c)
    if h.n == 0:
        raise InputError("empty histogram")
    s = sp(h, alpha)
    perc = s * h.m / h.n
    naive = 1 + 1 / a
    large = 2 + cf * (1 - a) / a
    small = (cf / 2) * perc
    if period is None:
        period = small_limit(h.m, alpha)
    return RatioRow(
        period=period,
        nbseq=h.count(period),
        cum_nbseq=h.cumulative(period),
        alpha=a,
        naive_bound=naive,
        large_term=large,
        small_term=small,
        beta=large + small,
        c=cf,
        sp=s,
        perc=perc,
    )


def beta(h: PeriodHistogram, alpha: Number, c: Number = REFERENCE_C) -> float:
    """2 + c(1-alpha)/alpha + (c/2) * sp * m / n."""
    return ratio_row(h, alpha, c).beta


@debug_log
def ratio_table(h: PeriodHistogram, c: Number = REFERENCE_C, suppress_empty: bool = False) -> List[RatioRow]:
    """One row per period 1..m with alpha = i/m."""
    rows = [ratio_row(h, Fraction(i, h.m), c, period=i) for i in range(1, h.m + 1)]
    if suppress_empty:
        rows = [r for r in rows if r.nbseq > 0]
    return rows


def select_alpha(table: Sequence[RatioRow]) -> RatioRow:
    """Row with the least beta; ties go to the larger alpha."""
    if not table:
        raise InputError("empty ratio table")
    return min(table, key=lambda r: (r.beta, -r.alpha))


def plot_data(h: PeriodHistogram, selected: RatioRow, h_line_factor: float = 0.02) -> List[PlotPoint]:
    """Per period: n(x), the running sum of n(i)/i, and the two reference lines."""
    v_line = h.m * selected.alpha
    h_line = h_line_factor * h.n / h.m
    points = []
    terms: List[float] = []
    for x in range(1, h.m + 1):
        k = h.count(x)
        if k:
            terms.append(k / x)
        points.append(PlotPoint(period=x, count=k, cum_sp=math.fsum(terms), v_line=v_line, h_line=h_line))
    return points


# ---------------------------------------------------------------------------
# Derived checks and bounds
# ---------------------------------------------------------------------------

def small_term_floor_ok(h: PeriodHistogram, c: Number, tol: float = 1e-12) -> bool:
    """At alpha = 1 every read adds at least 1/m to sp, so small_term >= c/2."""
    return ratio_row(h, 1, c).small_term >= float(c) / 2 - tol


def low_periodicity_check(h: PeriodHistogram, lo: float = 0.8, hi: float = 1.0,
                          factor: float = 0.02) -> LowPeriodicityCheck:
    periods = [i for i in range(1, h.m + 1) if lo < i / h.m < hi]
    max_sp = max((sp(h, Fraction(i, h.m)) for i in periods), default=0.0)
    return LowPeriodicityCheck(lo=lo, hi=hi, factor=factor, threshold=factor * h.n / h.m,
                               periods=periods, max_sp=max_sp)


def w_sigma_bound(wt_c: int, alpha: Number, sp_value: float, m: int) -> float:
    """Upper bound on the total length of the per-cycle strings: wt + wt/alpha + sp*m/2."""
    a = _check_alpha(alpha)
    return wt_c + wt_c / a + sp_value * m / 2


def tau_bound(opt: int, alpha: Number, sp_value: float, m: int, c: Number) -> float:
    """2*OPT + c*((1-alpha)/alpha)*OPT + (c/2)*sp*m."""
    a = _check_alpha(alpha)
    cf = _check_c(c)
    return 2 * opt + cf * ((1 - a) / a) * opt + (cf / 2) * sp_value * m
