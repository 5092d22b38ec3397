from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from superpop.exceptions import ArgumentError
from superpop.strings.core import ALPHABETS

SCHEMA_VERSION = 1

# Built-in fallbacks; config/config.json mirrors these.
DEFAULT_VALUES: Dict[str, Any] = {
    "analysis.c": "38/63",
    "analysis.suppress_empty_rows": False,
    "assembly.c": "1/2",
    "assembly.alpha": "auto",
    "assembly.cover": "exact",
    "reads.format": "auto",
    "reads.alphabet": "generic",
    "reads.length_policy": "strict",
    "reads.stats_on_raw": True,
    "runtime.threads": 0,
    "runtime.log_level": "INFO",
    "schema_version": SCHEMA_VERSION,
    "graph.indexed_threshold": 64,
    "graph.max_vertices": 5000,
    "cover.exact_max_vertices": 2000,
    "oracle.ssp_limit": 12,
    "oracle.cover_limit": 8,
    "plot.h_line_factor": 0.02,
}

COMMANDS = ("analyze", "assemble", "verify", "oracle")
FORMATS = ("auto", "fasta", "fastq", "raw")
LENGTH_POLICIES = ("strict", "filter-to-modal")
COVER_BACKENDS = ("exact", "greedy")


@dataclass
class SettingItem:
    name: str
    shortname: str
    value: Any
    values: Any
    description: str
    type: str
    accessibility: str
    group: str
    icon: str


@dataclass
class Configuration:
    user: Dict[str, SettingItem]
    static: Dict[str, Any]


def parse_fraction(text: Union[str, int, float, Fraction], what: str = "c") -> Fraction:
    """Parse "38/63", "1/2" or "0.5" into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    try:
        if isinstance(text, float):
            return Fraction(text).limit_denominator(10**9)
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentError(f"Cannot parse {what}={text!r} as a rational number") from exc


def parse_alpha(text: Union[str, float, Fraction, None]) -> Optional[Fraction]:
    """Return None for 'auto', otherwise the explicit alpha as a Fraction."""
    if text is None or str(text).strip().lower() == "auto":
        return None
    return parse_fraction(text, "alpha")


@dataclass
class RunConfig:
    """Resolved options for one CLI invocation (config defaults overlaid with flags)."""
    command: str
    inputs: list = field(default_factory=list)
    format: str = "auto"
    length_policy: str = "strict"
    alphabet: str = "generic"
    c: Fraction = Fraction(38, 63)
    alpha: Optional[Fraction] = None
    cover: str = "exact"
    table_out: Optional[str] = None
    plot_out: Optional[str] = None
    json_out: Optional[str] = None
    superstring_out: Optional[str] = None
    stats_out: Optional[str] = None
    dump_graph: Optional[str] = None
    dump_cover: Optional[str] = None
    threads: int = 0
    suppress_empty_rows: bool = False
    stats_on_raw: bool = True
    timestamp: bool = True
    limit: int = 12

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ArgumentError(f"Unknown command '{self.command}'")
        if self.format not in FORMATS:
            raise ArgumentError(f"Unknown format '{self.format}', expected one of {FORMATS}")
        if self.length_policy not in LENGTH_POLICIES:
            raise ArgumentError(f"Unknown length policy '{self.length_policy}'")
        if self.alphabet not in ALPHABETS:
            raise ArgumentError(f"Unknown alphabet '{self.alphabet}', expected one of {sorted(ALPHABETS)}")
        if self.cover not in COVER_BACKENDS:
            raise ArgumentError(f"Unknown cover backend '{self.cover}'")
        if not (0 < self.c <= 1):
            raise ArgumentError(f"Compression factor c={self.c} must lie in (0, 1]")
        if self.alpha is not None and not (0 < self.alpha <= 1):
            raise ArgumentError(f"alpha={self.alpha} must lie in (0, 1]")
        if self.threads < 0:
            raise ArgumentError("threads must be >= 0")
        outputs = [p for p in (self.table_out, self.plot_out, self.json_out,
                               self.superstring_out, self.stats_out,
                               self.dump_graph, self.dump_cover) if p and p != "-"]
        if len(outputs) != len(set(outputs)):
            raise ArgumentError("Output paths must be distinct from each other")
        if set(outputs) & set(self.inputs):
            raise ArgumentError("Output paths must differ from the input paths")
        return self
