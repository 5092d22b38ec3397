import io

import pytest

from superpop.exceptions import InputError, LengthMismatchError, ParseError
from superpop.reads.parser import iter_fasta, parse_reads, read_superstring, sniff_format
from superpop.reads.readset import ReadSet, dedupe
from superpop.strings.core import DNA


def test_fastq_three_reads(write_reads):
    reads = ["ACGT" * 9, "TTGCA" * 7 + "A", "G" * 36]
    rs = parse_reads(write_reads(reads, "fastq"))
    assert (rs.n, rs.m) == (3, 36)
    assert rs.reads == tuple(reads)


def test_fasta_single_record(write_reads):
    rs = parse_reads(write_reads(["ACGT"], "fasta"))
    assert (rs.n, rs.m) == (1, 4)


def test_multiline_fasta_record():
    records = list(iter_fasta([">r0", "AC", "GT", ">r1", "TTTT"]))
    assert records == [(0, "r0", "ACGT"), (1, "r1", "TTTT")]


def test_gzip_is_detected(write_reads):
    rs = parse_reads(write_reads(["ACGT", "CGTA"], "fasta", compress=True))
    assert rs.reads == ("ACGT", "CGTA")


def test_binary_stream_source():
    rs = parse_reads(io.BytesIO(b"abab\nbaba\n"), fmt="raw")
    assert rs.reads == ("ABAB", "BABA")


def test_strict_length_mismatch(write_reads):
    with pytest.raises(LengthMismatchError) as err:
        parse_reads(write_reads(["abab", "abc"]))
    assert err.value.record_index == 1
    assert isinstance(err.value, InputError)


def test_filter_to_modal_drops_minority(write_reads):
    rs = parse_reads(write_reads(["abab", "abc", "baba"]), length_policy="filter-to-modal")
    assert rs.reads == ("ABAB", "BABA")
    assert rs.dropped == 1


def test_empty_file(write_reads):
    with pytest.raises(InputError, match="no usable reads"):
        parse_reads(write_reads([]))


@pytest.mark.parametrize("text, index", [
    ("@r0\nACGT\n+\nIII\n", 0),
    ("@r0\nACGT\n+\nIIII\n@r1\nACGT\n", 1),
    ("@r0\nACGT\n-\nIIII\n", 0),
])
def test_malformed_fastq(text, index):
    with pytest.raises(ParseError) as err:
        parse_reads(io.BytesIO(text.encode()), fmt="fastq")
    assert err.value.record_index == index


def test_alphabet_violation():
    with pytest.raises(ParseError):
        parse_reads(io.BytesIO(b">r\nACXT\n"), alphabet=DNA)


@pytest.mark.parametrize("line, fmt", [(">x", "fasta"), ("@x", "fastq"), ("ACGT", "raw")])
def test_sniff_format(line, fmt):
    assert sniff_format(line) == fmt


def test_raw_roundtrip(tmp_path):
    rs = ReadSet.from_reads(["ACGT", "CGTA", "ACGT"])
    path = tmp_path / "reads.txt"
    rs.write_raw(path)
    assert parse_reads(path, fmt="raw") == rs


def test_read_superstring(tmp_path):
    fasta = tmp_path / "tau.fa"
    fasta.write_text(">superstring\nabab\nab\n>other\nCCCC\n")
    assert read_superstring(fasta) == "ABABAB"
    raw = tmp_path / "tau.txt"
    raw.write_text("abab\nab\n")
    assert read_superstring(raw) == "ABABAB"


def test_dedupe_counts():
    rs, mult = dedupe(ReadSet.from_reads(["abab", "abab", "acgt"]))
    assert rs.reads == ("abab", "acgt")
    assert mult == {"abab": 2, "acgt": 1}
    assert sum(mult.values()) == 3


def test_dedupe_identity_and_collapse():
    distinct = ReadSet.from_reads(["ab", "ba", "aa"])
    assert dedupe(distinct)[0] == distinct
    rs, mult = dedupe(ReadSet.from_reads(["ab"] * 5))
    assert rs.reads == ("ab",)
    assert mult == {"ab": 5}


def test_readset_rejects_mixed_lengths():
    with pytest.raises(InputError):
        ReadSet(reads=("ab", "abc"), m=2)


@pytest.mark.parametrize("fmt", ["fasta", "fastq", "raw"])
def test_source_records_sniffed_format(write_reads, fmt):
    path = write_reads(["ACGT", "CGTA"], fmt)
    assert parse_reads(path).source == f"{path} ({fmt})"


def test_from_reads_normalize():
    assert ReadSet.from_reads(["acgt", "TtGa"]).reads == ("acgt", "TtGa")
    assert ReadSet.from_reads([" acgt", "TtGa\n"], normalize=True).reads == ("ACGT", "TTGA")
