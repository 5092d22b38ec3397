"""
Command-line entry point: ``superpop analyze|assemble|verify|oracle``.

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 capacity limit exceeded.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from superpop import SuperPop
from superpop.analysis import periodstats, report
from superpop.assembly import assembler, overlapgraph
from superpop.configuration.exceptions import ConfigurationError
from superpop.configuration.models import (
    COVER_BACKENDS,
    FORMATS,
    LENGTH_POLICIES,
    RunConfig,
    parse_alpha,
    parse_fraction,
)
from superpop.exceptions import ArgumentError, CapacityError, InputError
from superpop import oracle
from superpop.parallel import resolve_workers
from superpop.reads.parser import parse_reads, read_superstring
from superpop.reads.readset import dedupe
from superpop.strings.core import ALPHABETS

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superpop",
        description="Period statistics and cycle-cover superstrings for uniform-length reads.",
    )
    parser.add_argument("--config", default=None, help="path to config.json")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--log-file", default=None, help="also log to this file")
    parser.add_argument("--threads", type=int, default=None, help="worker processes (0 = logical cores)")
    parser.add_argument("--no-timestamp", action="store_true", help="omit generated_at from JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def reads_options(p: argparse.ArgumentParser, flag: str = "--input") -> None:
        p.add_argument(flag, dest="input", required=True, help="FASTA/FASTQ/raw reads, optionally gzipped")
        p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--length-policy", choices=LENGTH_POLICIES, default=None)
        p.add_argument("--alphabet", choices=sorted(ALPHABETS), default=None,
                       help="symbols a read may contain (default from reads.alphabet)")

    p = sub.add_parser("analyze", help="period histogram, ratio table and selected alpha")
    reads_options(p)
    p.add_argument("--c", default=None, help="compression factor as a rational, e.g. 38/63")
    p.add_argument("--out", default=None, help="ratio table TSV")
    p.add_argument("--plot", default=None, help="plot data CSV")
    p.add_argument("--json", default=None, help="JSON report")
    p.add_argument("--suppress-empty", action="store_true", default=None,
                   help="drop table rows with no reads of that period")
    p.add_argument("--dedupe", action="store_true",
                   help="compute statistics on distinct reads instead of raw reads")

    p = sub.add_parser("assemble", help="cycle-cover superstring")
    reads_options(p)
    p.add_argument("--alpha", default=None, help="'auto' or a value in (0, 1]")
    p.add_argument("--c", default=None, help="compression factor used to select alpha")
    p.add_argument("--cover", choices=COVER_BACKENDS, default=None)
    p.add_argument("--out", default=None, help="superstring output (.fa/.fasta writes FASTA, otherwise raw)")
    p.add_argument("--stats", default=None, help="stats JSON")
    p.add_argument("--dump-graph", default=None, help="write the prefix graph matrix as TSV")
    p.add_argument("--dump-cover", default=None, help="write the cycle cover as JSON")

    p = sub.add_parser("verify", help="check that every read occurs in a superstring")
    p.add_argument("--superstring", required=True)
    reads_options(p, "--reads")

    p = sub.add_parser("oracle", help="exact shortest superstring for tiny inputs")
    reads_options(p)
    p.add_argument("--limit", type=int, default=None, help="maximum number of distinct strings")
    p.add_argument("--cycle-cover", action="store_true", help="also report the brute-force cycle cover")
    p.add_argument("--cover-limit", type=int, default=None)
    return parser


def _pick(flag, pop: SuperPop, key: str):
    return flag if flag is not None else pop.config.get_value(key)


def build_run_config(args: argparse.Namespace, pop: SuperPop) -> RunConfig:
    """Overlay command-line flags on configuration values."""
    command = args.command
    section = "assembly" if command == "assemble" else "analysis"
    cfg = RunConfig(
        command=command,
        inputs=[args.input] + ([args.superstring] if command == "verify" else []),
        format=_pick(args.format, pop, "reads.format"),
        length_policy=_pick(args.length_policy, pop, "reads.length_policy"),
        alphabet=_pick(args.alphabet, pop, "reads.alphabet"),
        c=parse_fraction(_pick(getattr(args, "c", None), pop, f"{section}.c")),
        threads=int(_pick(args.threads, pop, "runtime.threads")),
        timestamp=not args.no_timestamp,
    )
    if command == "analyze":
        cfg.table_out, cfg.plot_out, cfg.json_out = args.out, args.plot, args.json
        cfg.suppress_empty_rows = bool(_pick(args.suppress_empty, pop, "analysis.suppress_empty_rows"))
        cfg.stats_on_raw = bool(pop.config.get_value("reads.stats_on_raw")) and not args.dedupe
    elif command == "assemble":
        cfg.alpha = parse_alpha(_pick(args.alpha, pop, "assembly.alpha"))
        cfg.cover = _pick(args.cover, pop, "assembly.cover")
        cfg.superstring_out, cfg.stats_out = args.out, args.stats
        cfg.dump_graph, cfg.dump_cover = args.dump_graph, args.dump_cover
    elif command == "oracle":
        cfg.limit = int(_pick(args.limit, pop, "oracle.ssp_limit"))
    return cfg.validate()


def _open_out(path: Optional[str], default: TextIO):
    if path in (None, "-"):
        return contextlib.nullcontext(default)
    return open(path, "w", encoding="utf-8", newline="\n")


def _load(cfg: RunConfig):
    return parse_reads(cfg.inputs[0], cfg.format, cfg.length_policy, ALPHABETS[cfg.alphabet])


def _print_json(doc: dict, path: Optional[str] = None) -> None:
    if path and path != "-":
        report.write_json(doc, path)
    else:
        sys.stdout.write(report.dumps(doc))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_analyze(cfg: RunConfig, pop: SuperPop) -> int:
    rs = _load(cfg)
    if not cfg.stats_on_raw:
        rs, _ = dedupe(rs)
        _log.info("Statistics on %d distinct reads", rs.n)
    workers = resolve_workers(cfg.threads)
    factor = float(pop.config.get_value("plot.h_line_factor"))

    h = periodstats.histogram(rs, workers)
    full = periodstats.ratio_table(h, cfg.c)
    selected = periodstats.select_alpha(full)
    rows = [r for r in full if r.nbseq > 0] if cfg.suppress_empty_rows else full

    floor_ok = periodstats.small_term_floor_ok(h, cfg.c)
    if not floor_ok:
        _log.warning("small_term at alpha=1 is below c/2; histogram looks inconsistent")
    low = periodstats.low_periodicity_check(h, factor=factor)
    if not low.holds:
        _log.info("sp exceeds %.3g*n/m for some alpha in (%.2f, %.2f)", factor, low.lo, low.hi)

    if cfg.table_out:
        report.write_ratio_table(rows, cfg.table_out)
    if cfg.plot_out:
        report.write_plot_data(periodstats.plot_data(h, selected, factor), cfg.plot_out)
    if cfg.json_out:
        doc = report.analysis_report(h, selected, cfg.c, rs.source, floor_ok, low,
                                     duplicates_counted=cfg.stats_on_raw)
        report.write_json(report.envelope(doc, cfg.timestamp), cfg.json_out)

    sys.stdout.write("\t".join(report.TABLE_COLUMNS) + "\n" + report.format_row(selected) + "\n")
    _log.info("Selected alpha=%d/%d with beta=%.6g", selected.period, h.m, selected.beta)
    return EXIT_OK


def _write_superstring(tau: str, path: Optional[str], n: int) -> None:
    fasta = path is not None and path.lower().endswith((".fa", ".fasta", ".fna"))
    with _open_out(path, sys.stdout) as out:
        if fasta:
            out.write(f">superstring length={len(tau)} reads={n}\n")
        out.write(tau + "\n")


def _write_dumps(result: assembler.Assembly, cfg: RunConfig) -> None:
    if not (cfg.dump_graph or cfg.dump_cover):
        return
    if result.graph is None:
        _log.warning("Single distinct read: no prefix graph or cycle cover to dump")
        return
    if cfg.dump_graph:
        result.graph.dump_tsv(cfg.dump_graph)
        _log.info("Prefix graph written to %s", cfg.dump_graph)
    if cfg.dump_cover:
        report.write_json(report.envelope(result.cover.to_dict(), cfg.timestamp), cfg.dump_cover)
        _log.info("Cycle cover written to %s", cfg.dump_cover)


def cmd_assemble(cfg: RunConfig, pop: SuperPop) -> int:
    raw = _load(cfg)
    rs, multiplicity = dedupe(raw)
    if rs.n < raw.n:
        _log.info("Collapsed %d duplicate reads (%d distinct)", raw.n - rs.n, rs.n)
    result = assembler.assemble(
        rs,
        alpha=cfg.alpha,
        c=cfg.c,
        backend=cfg.cover,
        workers=resolve_workers(cfg.threads),
        indexed_threshold=int(pop.config.get_value("graph.indexed_threshold")),
        max_vertices=int(pop.config.get_value("graph.max_vertices")),
        exact_max_vertices=int(pop.config.get_value("cover.exact_max_vertices")),
    )
    check = assembler.verify(result.tau, rs)
    _write_superstring(result.tau, cfg.superstring_out, rs.n)
    _write_dumps(result, cfg)

    stats = {**result.stats.to_dict(), "verified": check.passed,
             "duplicates": sum(multiplicity.values()) - len(multiplicity)}
    doc = report.envelope(stats, cfg.timestamp)
    if cfg.stats_out:
        _print_json(doc, cfg.stats_out)
    elif cfg.superstring_out not in (None, "-"):
        _print_json(doc)
    else:
        # stdout carries the superstring
        sys.stderr.write(report.dumps(doc))
    return EXIT_OK if check.passed else EXIT_VERIFY_FAILED


def cmd_verify(cfg: RunConfig, pop: SuperPop) -> int:
    tau = read_superstring(cfg.inputs[1])
    rs = _load(cfg)
    check = assembler.verify(tau, rs)
    _print_json(report.envelope({"tau_len": len(tau), **check.to_dict()}, cfg.timestamp))
    return EXIT_OK if check.passed else EXIT_VERIFY_FAILED


def cmd_oracle(cfg: RunConfig, pop: SuperPop, cycle_cover: bool = False,
               cover_limit: Optional[int] = None) -> int:
    rs, _ = dedupe(_load(cfg))
    best = oracle.exact_ssp(rs.reads, cfg.limit)
    doc = {"opt": best.value, "witness": best.witness, "n": rs.n, "m": rs.m}
    if cycle_cover:
        limit = cover_limit if cover_limit is not None else int(pop.config.get_value("oracle.cover_limit"))
        graph = overlapgraph.build_naive(rs, max_vertices=limit)
        cover = oracle.brute_cycle_cover(graph, limit)
        doc["cycle_cover"] = {"wt_C": cover.value, "cycles": cover.witness}
    _print_json(report.envelope(doc, cfg.timestamp))
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    pop = SuperPop().initialise(args.config, args.log_level, args.log_file)
    cfg = build_run_config(args, pop)
    _log.debug("Run configuration: %s", cfg)
    if cfg.command == "analyze":
        return cmd_analyze(cfg, pop)
    if cfg.command == "assemble":
        return cmd_assemble(cfg, pop)
    if cfg.command == "verify":
        return cmd_verify(cfg, pop)
    return cmd_oracle(cfg, pop, args.cycle_cover, args.cover_limit)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        return run(argv)
    except CapacityError as exc:
        _log.error("%s", exc)
        return EXIT_CAPACITY
    except (ArgumentError, InputError, ConfigurationError) as exc:
        _log.error("%s", exc)
        return EXIT_USAGE
    except OSError as exc:
        _log.error("Cannot access %s: %s", exc.filename or "file", exc.strerror or exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
