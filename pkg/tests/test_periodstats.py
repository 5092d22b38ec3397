from fractions import Fraction

import pytest

from superpop.analysis import periodstats as ps
from superpop.analysis.periodstats import REFERENCE_C, PeriodHistogram
from superpop.exceptions import ArgumentError, InputError
from superpop.reads.readset import ReadSet

# (m, alpha numerator, naive_bound, large_term) for c = 38/63
REFERENCE_ROWS = [
    (36, 33, 2.09091, 2.05483),
    (32, 29, 2.10345, 2.0624),
    (200, 196, 2.02041, 2.01231),
    (98, 95, 2.03158, 2.01905),
]


def aperiodic(m, n=10):
    return PeriodHistogram(m=m, counts={m: n}, n=n)


def test_histogram_counts():
    h = ps.histogram(ReadSet.from_reads(["aaaa", "abab", "abcd"]))
    assert h.counts == {1: 1, 2: 1, 4: 1}
    assert (h.n, h.m) == (3, 4)


def test_histogram_duplicates_and_single():
    assert ps.histogram(ReadSet.from_reads(["abcd"] * 3)).counts == {4: 3}
    assert ps.histogram(["a"]).counts == {1: 1}


def test_histogram_independent_of_workers(rng):
    reads = ["".join(rng.choice("ab") for _ in range(12)) for _ in range(300)]
    assert ps.histogram(reads, workers=1) == ps.histogram(reads, workers=3)


def test_histogram_validation():
    with pytest.raises(InputError):
        PeriodHistogram(m=4, counts={5: 1}, n=1)
    with pytest.raises(InputError):
        PeriodHistogram(m=4, counts={2: 1}, n=2)


def test_sp_two_terms():
    h = PeriodHistogram(m=4, counts={1: 1, 2: 1, 4: 1}, n=3)
    assert ps.sp(h, 0.5) == pytest.approx(1.5)
    assert ps.sp(h, Fraction(1, 5)) == 0.0
    assert ps.sp(aperiodic(4, 8), 1) == pytest.approx(8 / 4)


@pytest.mark.parametrize("alpha", [0, -0.5, 1.5])
def test_sp_rejects_alpha(alpha):
    with pytest.raises(ArgumentError):
        ps.sp(aperiodic(4), alpha)


def test_small_limit_boundary():
    assert ps.small_limit(3, 0.9) == 2
    assert ps.small_limit(36, 33 / 36) == 33
    assert ps.small_limit(36, Fraction(33, 36)) == 33


@pytest.mark.parametrize("m, num, naive, large", REFERENCE_ROWS)
def test_alpha_only_columns(m, num, naive, large):
    row = ps.ratio_row(aperiodic(m), Fraction(num, m), REFERENCE_C)
    assert row.naive_bound == pytest.approx(naive, abs=1e-4)
    assert row.large_term == pytest.approx(large, abs=1e-4)


@pytest.mark.parametrize("c, expected", [(REFERENCE_C, 2.301587), (Fraction(1, 2), 2.25)])
def test_trivial_beta(c, expected):
    row = ps.ratio_row(aperiodic(36, 500), 1, c)
    assert row.small_term == pytest.approx(float(c) / 2, abs=1e-12)
    assert row.beta == pytest.approx(2 + float(c) / 2, abs=1e-12)
    assert row.beta == pytest.approx(expected, abs=1e-6)


def test_beta_rejects_zero_alpha():
    with pytest.raises(ArgumentError):
        ps.beta(aperiodic(4), 0)


def test_beta_matches_row_columns():
    h = PeriodHistogram(m=8, counts={2: 3, 5: 4, 8: 13}, n=20)
    for row in ps.ratio_table(h, REFERENCE_C):
        assert row.beta == pytest.approx(row.large_term + row.small_term)
        assert row.small_term == pytest.approx(float(REFERENCE_C) / 2 * row.sp * h.m / h.n)


def test_ratio_table_rows_and_cumulative():
    h = PeriodHistogram(m=4, counts={1: 1, 2: 1, 4: 1}, n=3)
    table = ps.ratio_table(h)
    assert [r.period for r in table] == [1, 2, 3, 4]
    assert [r.nbseq for r in table] == [1, 1, 0, 1]
    assert [r.cum_nbseq for r in table] == [1, 2, 2, 3]
    assert [r.period for r in ps.ratio_table(h, suppress_empty=True)] == [1, 2, 4]


def test_select_alpha_all_aperiodic():
    # beta(1) = 2 + c/2 beats beta(1/2) = 2 + c
    assert ps.select_alpha(ps.ratio_table(aperiodic(2))).period == 2
    # for longer reads the row just below m wins: 2 + c/(m-1) < 2 + c/2
    row = ps.select_alpha(ps.ratio_table(aperiodic(36)))
    assert row.period == 35
    assert row.beta == pytest.approx(2 + float(REFERENCE_C) / 35)


def test_select_alpha_single_row_and_empty():
    table = ps.ratio_table(aperiodic(1))
    assert ps.select_alpha(table) is table[0]
    with pytest.raises(InputError):
        ps.select_alpha([])


def test_select_alpha_tie_prefers_larger_alpha():
    h = aperiodic(4)
    a = ps.ratio_row(h, Fraction(1, 4), REFERENCE_C, period=1)
    b = ps.ratio_row(h, Fraction(1, 4), REFERENCE_C, period=1)
    b = type(b)(**{**b.to_dict(), "alpha": 0.5, "period": 2})
    assert ps.select_alpha([a, b]).period == 2


def test_plot_data_running_sum():
    h = PeriodHistogram(m=4, counts={1: 1, 2: 2, 4: 1}, n=4)
    selected = ps.select_alpha(ps.ratio_table(h))
    points = ps.plot_data(h, selected)
    assert [p.count for p in points] == [1, 2, 0, 1]
    assert [p.cum_sp for p in points] == pytest.approx([1.0, 2.0, 2.0, 2.25])
    assert points[2].cum_sp == points[1].cum_sp
    assert all(p.h_line == pytest.approx(0.02 * 4 / 4) for p in points)
    assert all(p.v_line == pytest.approx(4 * selected.alpha) for p in points)


def test_perc_alpha():
    h = PeriodHistogram(m=4, counts={1: 1, 2: 1, 4: 1}, n=3)
    assert ps.perc_alpha(h, 0.5) == pytest.approx(1.5 * 4 / 3)


def test_small_term_floor():
    assert ps.small_term_floor_ok(PeriodHistogram(m=6, counts={1: 2, 3: 1, 6: 5}, n=8), REFERENCE_C)
    assert ps.small_term_floor_ok(aperiodic(10), REFERENCE_C)


def test_low_periodicity_check():
    check = ps.low_periodicity_check(aperiodic(10, 100))
    assert check.periods == [9]
    assert check.max_sp == 0.0
    assert check.holds
    noisy = ps.low_periodicity_check(PeriodHistogram(m=10, counts={1: 50, 10: 50}, n=100))
    assert not noisy.holds


def test_bounds():
    assert ps.w_sigma_bound(6, 0.5, 1.0, 4) == pytest.approx(6 + 12 + 2)
    assert ps.tau_bound(10, 0.5, 1.0, 4, Fraction(1, 2)) == pytest.approx(20 + 5 + 1)
