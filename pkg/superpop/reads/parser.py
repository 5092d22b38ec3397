"""
Streaming FASTA / FASTQ / raw-lines reader with gzip auto-detection.

Records are yielded one at a time as ``(record_index, header, sequence)``;
FASTQ quality strings are checked for length and then discarded.
"""
from __future__ import annotations

import gzip
import io
import itertools
import logging
from collections import Counter
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, List, Optional, Tuple, Union

from superpop.exceptions import InputError, LengthMismatchError, ParseError
from superpop.reads.readset import ReadSet
from superpop.strings.core import GENERIC, Alphabet
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

GZIP_MAGIC = b"\x1f\x8b"

Record = Tuple[int, str, str]
Source = Union[str, Path, BinaryIO]


def _text_stream(raw: BinaryIO) -> io.TextIOWrapper:
    buffered = raw if hasattr(raw, "peek") else io.BufferedReader(raw)
    if buffered.peek(2)[:2] == GZIP_MAGIC:
        _log.debug("gzip input detected")
        buffered = gzip.GzipFile(fileobj=buffered, mode="rb")
    return io.TextIOWrapper(buffered, encoding="utf-8", errors="replace", newline=None)


def sniff_format(first_line: str) -> str:
    if first_line.startswith(">"):
        return "fasta"
    if first_line.startswith("@"):
        return "fastq"
    return "raw"


def iter_fasta(lines: Iterable[str]) -> Iterator[Record]:
    index = -1
    header: Optional[str] = None
    chunks: List[str] = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if header is not None:
                if not chunks:
                    raise ParseError(index, "FASTA record has no sequence")
                yield index, header, "".join(chunks)
            index += 1
            header = line[1:]
            chunks = []
        else:
            if header is None:
                raise ParseError(0, "sequence line before the first '>' header")
            chunks.append(line)
    if header is not None:
        if not chunks:
            raise ParseError(index, "FASTA record has no sequence")
        yield index, header, "".join(chunks)


def iter_fastq(lines: Iterable[str]) -> Iterator[Record]:
    it = iter(lines)
    index = 0
    for line in it:
        header = line.strip()
        if not header:
            continue
        if not header.startswith("@"):
            raise ParseError(index, f"expected '@' header, found {header[:20]!r}")
        seq, sep, qual = (next(it, None) for _ in range(3))
        if qual is None:
            raise ParseError(index, "truncated FASTQ record")
        seq, sep, qual = seq.strip(), sep.strip(), qual.strip()
        if not sep.startswith("+"):
            raise ParseError(index, f"expected '+' separator, found {sep[:20]!r}")
        if len(seq) != len(qual):
            raise ParseError(index, "sequence/quality length mismatch")
        yield index, header[1:], seq
        index += 1


def iter_raw(lines: Iterable[str]) -> Iterator[Record]:
    index = 0
    for line in lines:
        seq = line.strip()
        if seq:
            yield index, "", seq
            index += 1


_ITERATORS = {"fasta": iter_fasta, "fastq": iter_fastq, "raw": iter_raw}


def iter_records(stream: io.TextIOBase, fmt: str = "auto") -> Tuple[str, Iterator[Record]]:
    """Return the resolved format (sniffed when 'auto') and its record iterator."""
    lines = iter(stream)
    if fmt == "auto":
        head = list(itertools.islice((l for l in lines if l.strip()), 1))
        fmt = sniff_format(head[0].lstrip()) if head else "raw"
        lines = itertools.chain(head, lines)
        _log.debug("Sniffed input format: %s", fmt)
    if fmt not in _ITERATORS:
        raise InputError(f"unknown read format '{fmt}'")
    return fmt, _ITERATORS[fmt](lines)


def _collect(records: Iterable[Record], alphabet: Alphabet, length_policy: str) -> Tuple[List[str], int]:
    reads: List[str] = []
    expected: Optional[int] = None
    for index, _header, raw in records:
        seq = alphabet.normalize(raw)
        bad = alphabet.first_invalid(seq)
        if bad is not None:
            raise ParseError(index, f"symbol {bad!r} not in alphabet '{alphabet.name}'")
        if length_policy == "strict":
            if expected is None:
                expected = len(seq)
            elif len(seq) != expected:
                raise LengthMismatchError(index, expected, len(seq))
        reads.append(seq)

    dropped = 0
    if length_policy == "filter-to-modal" and reads:
        lengths = Counter(len(r) for r in reads)
        # most_common keeps first-seen order among ties
        modal = lengths.most_common(1)[0][0]
        kept = [r for r in reads if len(r) == modal]
        dropped = len(reads) - len(kept)
        if dropped:
            _log.warning("Dropped %d reads not of modal length %d", dropped, modal)
        reads = kept
    elif length_policy not in ("strict", "filter-to-modal"):
        raise InputError(f"unknown length policy '{length_policy}'")
    return reads, dropped


@debug_log
def parse_reads(source: Source, fmt: str = "auto", length_policy: str = "strict",
                alphabet: Alphabet = GENERIC) -> ReadSet:
    """Parse a path or binary stream into a ReadSet (reads in file order)."""
    if isinstance(source, (str, Path)):
        label = str(source)
        with open(source, "rb") as fh:
            fmt, records = iter_records(_text_stream(fh), fmt)
            reads, dropped = _collect(records, alphabet, length_policy)
    else:
        label = getattr(source, "name", "<stream>")
        fmt, records = iter_records(_text_stream(source), fmt)
        reads, dropped = _collect(records, alphabet, length_policy)

    if not reads:
        raise InputError("no usable reads")
    rs = ReadSet(reads=tuple(reads), m=len(reads[0]), source=f"{label} ({fmt})", dropped=dropped)
    _log.info("Parsed %d reads of length %d from %s", rs.n, rs.m, label)
    return rs


def read_superstring(source: Source) -> str:
    """First FASTA record, or the whole text with whitespace removed."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            return _read_superstring(_text_stream(fh))
    return _read_superstring(_text_stream(source))


def _read_superstring(stream: io.TextIOBase) -> str:
    text = stream.read()
    if text.lstrip().startswith(">"):
        for _index, _header, seq in iter_fasta(text.splitlines()):
            return seq.upper()
    return "".join(text.split()).upper()
