from pathlib import Path
from typing import Optional, Union

from superpop.analysis import periodstats
from superpop.assembly.assembler import Assembly, assemble
from superpop.configuration.models import parse_alpha, parse_fraction
from superpop.configuration.parser import ConfigurationManager
from superpop.exceptions import ArgumentError
from superpop.reads.parser import parse_reads
from superpop.reads.readset import ReadSet, dedupe
from superpop.strings.core import ALPHABETS
from superpop.superpoplogger import SuperPopLogger, configure_logging, debug_log

__version__ = "0.1.0"


class SuperPop:
    """
    Facade wiring configuration and logging, with one-call analyze/assemble helpers.

        pop = SuperPop().initialise("config/config.json")
        table, selected = pop.analyze("reads.fastq")
    """

    def __init__(self):
        self.config: Optional[ConfigurationManager] = None
        self.log: Optional[SuperPopLogger] = None
        self._initialized = False

    @debug_log
    def initialise(self, config_path: Union[str, Path, None] = None, log_level: Optional[str] = None,
                   log_file: Optional[str] = None):
        if self._initialized:
            return self
        self.config = ConfigurationManager(config_path)
        self.log = configure_logging(log_level or self.config.get_value("runtime.log_level"), log_file)
        self._initialized = True
        return self

    def is_initialized(self) -> bool:
        return self._initialized

    def _setting(self, key: str, override=None):
        return override if override is not None else self.config.get_value(key)

    def load_reads(self, path: Union[str, Path], fmt: Optional[str] = None,
                   length_policy: Optional[str] = None, alphabet: Optional[str] = None) -> ReadSet:
        name = self._setting("reads.alphabet", alphabet)
        if name not in ALPHABETS:
            raise ArgumentError(f"Unknown alphabet '{name}', expected one of {sorted(ALPHABETS)}")
        return parse_reads(path, self._setting("reads.format", fmt),
                           self._setting("reads.length_policy", length_policy), ALPHABETS[name])

    def analyze(self, source: Union[str, Path, ReadSet], c=None, workers: int = 1):
        """Return (ratio table, selected row) for a read file or ReadSet."""
        rs = source if isinstance(source, ReadSet) else self.load_reads(source)
        if not self.config.get_value("reads.stats_on_raw"):
            rs, _ = dedupe(rs)
        h = periodstats.histogram(rs, workers)
        table = periodstats.ratio_table(h, parse_fraction(self._setting("analysis.c", c)))
        return table, periodstats.select_alpha(table)

    def assemble(self, source: Union[str, Path, ReadSet], alpha=None, c=None, cover: Optional[str] = None,
                 workers: int = 1) -> Assembly:
        rs = source if isinstance(source, ReadSet) else self.load_reads(source)
        rs, _ = dedupe(rs)
        return assemble(
            rs,
            alpha=parse_alpha(self._setting("assembly.alpha", alpha)),
            c=parse_fraction(self._setting("assembly.c", c)),
            backend=self._setting("assembly.cover", cover),
            workers=workers,
            indexed_threshold=int(self.config.get_value("graph.indexed_threshold")),
            max_vertices=int(self.config.get_value("graph.max_vertices")),
            exact_max_vertices=int(self.config.get_value("cover.exact_max_vertices")),
        )
