import gzip
import random
from pathlib import Path
from typing import List

import pytest

from superpop.reads.readset import ReadSet


def random_string(rng: random.Random, length: int, alphabet: str = "ab") -> str:
    return "".join(rng.choice(alphabet) for _ in range(length))


def random_reads(rng: random.Random, n: int, m: int, alphabet: str = "ab", distinct: bool = True) -> List[str]:
    """n reads of length m; with distinct=True the alphabet must allow n distinct strings."""
    reads: List[str] = []
    seen = set()
    while len(reads) < n:
        s = random_string(rng, m, alphabet)
        if distinct and s in seen:
            continue
        seen.add(s)
        reads.append(s)
    return reads


@pytest.fixture
def rng():
    return random.Random(20240417)


@pytest.fixture
def write_reads(tmp_path: Path):
    """Write reads in the requested format and return the path."""

    def _write(reads, fmt: str = "raw", name: str = None, compress: bool = False) -> Path:
        if fmt == "fasta":
            text = "".join(f">r{i}\n{r}\n" for i, r in enumerate(reads))
        elif fmt == "fastq":
            text = "".join(f"@r{i}\n{r}\n+\n{'I' * len(r)}\n" for i, r in enumerate(reads))
        else:
            text = "".join(f"{r}\n" for r in reads)
        path = tmp_path / (name or f"reads.{fmt}" + (".gz" if compress else ""))
        if compress:
            with gzip.open(path, "wt", encoding="utf-8") as fh:
                fh.write(text)
        else:
            path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def cyclic3():
    return ReadSet.from_reads(["abc", "bca", "cab"])


@pytest.fixture
def abab_pair():
    return ReadSet.from_reads(["abab", "baba"])
