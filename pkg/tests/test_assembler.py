from fractions import Fraction

import pytest

from conftest import random_reads, random_string
from superpop import oracle
from superpop.analysis import periodstats
from superpop.assembly.assembler import (
    assemble,
    build_sigma,
    containment_filter,
    greedy_compress,
    representative,
    resolve_alpha,
    verify,
)
from superpop.assembly.overlapgraph import build_naive
from superpop.exceptions import CapacityError, InputError
from superpop.reads.readset import ReadSet
from superpop.strings.core import overlap


@pytest.mark.parametrize("cycle, rep", [([5, 2, 9], 2), ([1, 0], 0)])
def test_representative(cycle, rep):
    assert representative(cycle) == rep


@pytest.mark.parametrize("reads, sigma", [
    (["abc", "bca", "cab"], "abcabc"),
    (["abab", "baba"], "ababab"),
    (["abc", "xyz"], "abcxyzabc"),
])
def test_build_sigma(reads, sigma):
    rs = ReadSet.from_reads(reads)
    cycle = list(range(len(reads)))
    assert build_sigma(cycle, 0, rs) == sigma
    assert build_sigma(cycle, 0, rs, build_naive(rs)) == sigma


def test_build_sigma_rotates_to_representative(cyclic3):
    assert build_sigma([1, 2, 0], 0, cyclic3) == "abcabc"
    with pytest.raises(InputError):
        build_sigma([0, 1], 2, cyclic3)


def test_greedy_compress_examples():
    assert greedy_compress(["abcd", "cdab"]) == "abcdab"
    assert greedy_compress(["abab"]) == "abab"
    assert len(greedy_compress(["abc", "xyz"])) == 6


def test_containment_filter():
    kept, dropped = containment_filter(["abcabc", "bca", "abcabc", "xy"])
    assert kept == ["abcabc", "xy"]
    assert dropped == 2


@pytest.mark.parametrize("tau, reads, passed, missing", [
    ("ababa", ["abab", "baba"], True, []),
    ("abab", ["baba"], False, ["baba"]),
    ("abcxyz", ["abc", "xyz"], True, []),
])
def test_verify(tau, reads, passed, missing):
    report = verify(tau, reads)
    assert report.passed is passed
    assert report.missing == missing
    assert report.checked == len(reads)


def test_assemble_abab_pair(abab_pair):
    result = assemble(abab_pair)
    assert result.sigma_strings == ["ababab"]
    assert result.tau == "ababab"
    assert result.stats.tau_len == 6
    assert result.stats.wt_C == 2
    assert oracle.exact_ssp(abab_pair.reads).value == 5


def test_assemble_rotations(cyclic3):
    result = assemble(cyclic3, backend="greedy")
    assert result.tau == "abcabc"
    assert result.cycles == [[0, 1, 2]]
    assert verify(result.tau, cyclic3).passed


def test_assemble_disjoint_triple():
    result = assemble(ReadSet.from_reads(["aaa", "bbb", "ccc"]))
    # one 3-cycle of weight 9 unrolled around the representative
    assert len(result.tau) == 12
    assert result.tau.startswith("aaa") and result.tau.endswith("aaa")
    assert result.stats.wt_C == 9
    assert verify(result.tau, ["aaa", "bbb", "ccc"]).passed


def test_assemble_single_read_is_degenerate():
    result = assemble(ReadSet.from_reads(["acgt"]))
    assert result.tau == "acgt"
    assert result.stats.degenerate


def test_assemble_requires_deduplicated_input():
    with pytest.raises(InputError):
        assemble(ReadSet.from_reads(["ab", "ab"]))


def test_assemble_exact_capacity(cyclic3):
    with pytest.raises(CapacityError):
        assemble(cyclic3, exact_max_vertices=2)


def test_resolve_alpha():
    h = periodstats.PeriodHistogram(m=4, counts={4: 3}, n=3)
    assert resolve_alpha(h, Fraction(3, 2), Fraction(1, 2)) == 1
    assert resolve_alpha(h, Fraction(-1), Fraction(1, 2)) == Fraction(1, 4)
    assert resolve_alpha(h, "1/2", Fraction(1, 2)) == Fraction(1, 2)
    assert resolve_alpha(h, "auto", Fraction(1, 2)) == Fraction(3, 4)


def test_tau_bound_reported(cyclic3):
    opt = oracle.exact_ssp(cyclic3.reads).value
    result = assemble(cyclic3, opt=opt)
    assert result.stats.opt == 5
    assert result.stats.tau_len <= result.stats.tau_bound


@pytest.mark.slow
def test_random_assemblies(rng):
    for _ in range(60):
        n, m = rng.randint(2, 8), rng.randint(3, 8)
        rs = ReadSet.from_reads(random_reads(rng, n, m, "abc"[:rng.randint(2, 3)]))
        opt = oracle.exact_ssp(rs.reads, witness=False).value
        for backend in ("exact", "greedy"):
            result = assemble(rs, backend=backend, opt=opt)
            assert verify(result.tau, rs).passed
            assert opt <= result.stats.tau_len <= result.w_sigma_len
            assert result.stats.tau_bound is not None


@pytest.mark.slow
def test_tau_bound_on_random_instances(rng):
    for _ in range(200):
        n, m = rng.randint(3, 8), rng.randint(3, 8)
        rs = ReadSet.from_reads(random_reads(rng, n, m, "abcd"[:rng.randint(2, 4)]))
        opt = oracle.exact_ssp(rs.reads, witness=False).value
        result = assemble(rs, c=Fraction(1, 2), backend="exact", opt=opt)
        assert verify(result.tau, rs).passed
        assert result.stats.tau_len <= result.stats.tau_bound + 1e-9


@pytest.mark.parametrize("backend", ["exact", "greedy"])
def test_sigma_length_is_cover_weight_plus_one_read_per_cycle(rng, backend):
    for _ in range(100):
        n, m = rng.randint(2, 8), rng.randint(3, 8)
        rs = ReadSet.from_reads(random_reads(rng, n, m, "abcd"[:rng.randint(2, 4)]))
        result = assemble(rs, backend=backend)
        assert result.w_sigma_len == result.stats.wt_C + len(result.cycles) * rs.m


def _distinct_overlaps(strings):
    values = [overlap(u, v) for i, u in enumerate(strings) for j, v in enumerate(strings) if i != j]
    return len(set(values)) == len(values)


def test_greedy_compress_ignores_input_order_when_overlaps_are_distinct(rng):
    checked = 0
    for _ in range(3000):
        n = rng.randint(2, 4)
        strings = [random_string(rng, rng.randint(4, 10), "ab") for _ in range(n)]
        if any(i != j and u in v for i, u in enumerate(strings) for j, v in enumerate(strings)):
            continue
        if not _distinct_overlaps(strings):
            continue
        expected = greedy_compress(strings)
        for _ in range(5):
            shuffled = strings[:]
            rng.shuffle(shuffled)
            assert len(greedy_compress(shuffled)) == len(expected)
        checked += 1
    assert checked >= 20
