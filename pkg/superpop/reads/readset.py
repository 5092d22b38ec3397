from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, TextIO, Tuple, Union

from superpop.exceptions import InputError


@dataclass(frozen=True)
class ReadSet:
    """Uniform-length reads in input order. Immutable after construction."""
    reads: Tuple[str, ...]
    m: int
    source: str = field(default="<memory>", compare=False)
    dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        if not self.reads:
            raise InputError("no usable reads")
        if self.m < 1:
            raise InputError("read length must be >= 1")
        for index, read in enumerate(self.reads):
            if len(read) != self.m:
                raise InputError(f"read #{index} has length {len(read)}, expected {self.m}")

    @classmethod
    def from_reads(cls, reads, source: str = "<memory>", normalize: bool = False) -> "ReadSet":
        """
        Build from in-memory strings kept exactly as given. Pass ``normalize=True``
        to strip and upper-case them the way ``parse_reads`` does for files.
        """
        reads = tuple(r.strip().upper() for r in reads) if normalize else tuple(reads)
        if not reads:
            raise InputError("no usable reads")
        return cls(reads=reads, m=len(reads[0]), source=source)

    @property
    def n(self) -> int:
        return len(self.reads)

    def __len__(self) -> int:
        return len(self.reads)

    def __getitem__(self, index: int) -> str:
        return self.reads[index]

    def __iter__(self) -> Iterator[str]:
        return iter(self.reads)

    def write_raw(self, target: Union[str, Path, TextIO]) -> None:
        """One read per line; parse_reads(format='raw') restores an identical ReadSet."""
        text = "".join(f"{r}\n" for r in self.reads)
        if isinstance(target, (str, Path)):
            Path(target).write_text(text, encoding="utf-8")
        else:
            target.write(text)


def dedupe(rs: ReadSet) -> Tuple[ReadSet, Dict[str, int]]:
    """Distinct reads in first-occurrence order, plus read -> multiplicity."""
    counts = Counter(rs.reads)
    distinct = tuple(dict.fromkeys(rs.reads))
    multiplicity = {r: counts[r] for r in distinct}
    return ReadSet(reads=distinct, m=rs.m, source=rs.source, dropped=rs.dropped), multiplicity
