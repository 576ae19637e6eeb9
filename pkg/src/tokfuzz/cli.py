"""``tokfuzz`` command line: preprocess, fuzz, replay, report, plot.

Exit codes: 0 success, 1 a campaign hit its limit with crashes found (or a
replayed input crashed), 2 usage or configuration error, 3 target failure.
Everything except ``fuzz`` can be re-run with the same arguments and gives
the same result; ``fuzz`` appends to stats.csv and grows the queue.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from pathlib import Path

from .executor import INPROCESS_TARGET, SpawnFailure, TargetConfig, spawn
from .preproc import NoSeeds, TokenMap, parse_extra_tokens, preprocess_corpus, read_codes, skipped_count
from .protocol import SHM_NAME_ENV, Status
from .tokens import LexError

EXIT_OK = 0
EXIT_CRASHES = 1
EXIT_USAGE = 2
EXIT_TARGET = 3

BUNDLED_SEEDS = Path(__file__).parent / "seeds"


class UsageError(Exception):
    pass


# -- preprocess -----------------------------------------------------------------


def cmd_preprocess(args) -> int:
    seeds = Path(args.seeds) if args.seeds else BUNDLED_SEEDS
    if not seeds.is_dir():
        raise UsageError(f"seed directory {seeds} does not exist")
    extra = []
    if args.extra_tokens:
        try:
            extra = parse_extra_tokens(Path(args.extra_tokens).read_text(encoding="utf-8"))
        except (OSError, LexError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read extra tokens: {exc}") from exc
    try:
        tmap, encoded = preprocess_corpus(seeds, args.rng_seed, args.corpus, extra)
    except NoSeeds as exc:
        raise UsageError(str(exc)) from exc
    skipped = skipped_count(args.corpus)
    print(f"{len(encoded)} seeds, {len(tmap)} tokens ({skipped} skipped) -> {args.corpus}")
    return EXIT_OK


# -- fuzz -------------------------------------------------------------------------


def target_config(args) -> TargetConfig:
    if args.timeout_ms <= 0:
        raise UsageError("--timeout-ms must be positive")
    return TargetConfig(target_path=args.target, timeout_ms=args.timeout_ms)


def _status_line(campaign) -> None:
    s = campaign.stats
    rate = 100.0 * s.parse_ok_rate
    sys.stderr.write(f"\r[{campaign.mode}] execs {s.total_execs}  parse_ok {rate:5.2f}%  "
                     f"edges {s.edges_seen}  queue {len(campaign.queue)}  "
                     f"crashes {s.crash_count}  bugs {s.unique_crash_count}   ")
    sys.stderr.flush()


def cmd_fuzz(args) -> int:
    from .engine import AbortCampaign, Campaign, EngineConfig, Limits

    corpus = Path(args.corpus)
    if not (corpus / "tokenmap.txt").exists():
        raise UsageError(f"{corpus} is not a preprocessed corpus (run 'tokfuzz preprocess')")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    if args.max_execs is None and args.max_seconds is None:
        raise UsageError("give --max-execs or --max-seconds")
    config = EngineConfig(mode=args.mode, walk=not args.no_walk)
    callback = None if args.quiet else _status_line
    campaign = Campaign(corpus, target_config(args), config, rng_seed=args.rng_seed,
                        limits=Limits(args.max_execs, args.max_seconds),
                        workers=args.workers, status_callback=callback)
    try:
        stats = campaign.run()
    except AbortCampaign as exc:
        print(f"\nerror: {exc}", file=sys.stderr)
        return EXIT_TARGET
    except SpawnFailure as exc:
        print(f"\ntarget failure: {exc}", file=sys.stderr)
        return EXIT_TARGET
    if not args.quiet:
        sys.stderr.write("\n")
    print(f"{args.mode}: {stats.total_execs} execs, parse_ok {100 * stats.parse_ok_rate:.2f}%, "
          f"edges {stats.dry_run_edges} -> {stats.edges_seen}, "
          f"bugs {campaign.store.bug_ids() or 'none'}")
    return EXIT_CRASHES if stats.unique_crash_count else EXIT_OK


# -- replay -----------------------------------------------------------------------


def cmd_replay(args) -> int:
    path = Path(args.input)
    if not path.is_file():
        raise UsageError(f"no such input {path}")
    if path.suffix == ".tok":
        if not args.corpus:
            raise UsageError("replaying a .tok input needs --corpus for its token map")
        from .codec import decode
        tmap = TokenMap.load(Path(args.corpus) / "tokenmap.txt")
        program = decode(read_codes(path), tmap)
    else:
        program = path.read_bytes()
    try:
        target = spawn(target_config(args))
    except SpawnFailure as exc:
        print(f"target failure: {exc}", file=sys.stderr)
        return EXIT_TARGET
    try:
        result = target.run(program)
    finally:
        target.close()
    line = f"{result.status.label}"
    if result.status == Status.CRASH:
        line += f" assertion={result.assertion_id}"
    print(f"{line} edges={len(result.trace.edges())}")
    return EXIT_CRASHES if result.status == Status.CRASH else EXIT_OK


# -- report -------------------------------------------------------------------------


def read_stats(corpus: str | os.PathLike) -> list[dict[str, int]]:
    path = Path(corpus) / "stats.csv"
    if not path.exists():
        return []
    with open(path, newline="") as fh:
        return [{k: int(v) for k, v in row.items()} for row in csv.DictReader(fh)
                if row.get("unix_millis") not in (None, "unix_millis")]


def read_fuzzer_stats(corpus: str | os.PathLike) -> dict[str, str]:
    path = Path(corpus) / "fuzzer_stats"
    out = {}
    if path.exists():
        for line in path.read_text().splitlines():
            key, _, value = line.partition(":")
            out[key.strip()] = value.strip()
    return out


def crash_dirs(corpus: str | os.PathLike) -> list[str]:
    root = Path(corpus) / "crashes"
    if not root.is_dir():
        return []
    return sorted(p.name for p in root.iterdir() if p.is_dir())


def parse_rates(row: dict[str, int]) -> dict[str, float]:
    """Status shares from the last stats row; they add up to 1."""
    total = row["total_execs"]
    if not total:
        return {}
    other = total - row["parse_ok"] - row["parse_error"] - row["crashes"]
    return {
        "parse_ok": row["parse_ok"] / total,
        "parse_error": row["parse_error"] / total,
        "crash": row["crashes"] / total,
        "other": other / total,
    }


def coverage_series(rows: list[dict[str, int]], points: int = 10) -> list[tuple[int, int]]:
    if not rows:
        return []
    step = max(1, len(rows) // points)
    picked = rows[::step]
    if picked[-1] is not rows[-1]:
        picked.append(rows[-1])
    return [(r["total_execs"], r["edges_seen"]) for r in picked]


def summarize(corpus: str | os.PathLike) -> list[str]:
    rows = read_stats(corpus)
    if not rows:
        return [f"{corpus}: no data"]
    info = read_fuzzer_stats(corpus)
    last = rows[-1]
    rates = parse_rates(last)
    lines = [f"corpus {corpus} (mode {info.get('mode', '?')}, {last['total_execs']} execs)", "",
             "status        share"]
    for name, share in rates.items():
        lines.append(f"{name:<13} {100 * share:6.2f}%")
    bugs = [d for d in crash_dirs(corpus) if d.isdigit()]
    lines += ["", "unique bugs   assertion ids   crash dirs",
              f"{last['unique_crashes']:<13} {info.get('bug_ids') or '-':<15} "
              f"{','.join(crash_dirs(corpus)) or '-'}"]
    if len(bugs) != last["unique_crashes"]:
        lines.append(f"warning: {len(bugs)} bug directories but {last['unique_crashes']} unique crashes")
    lines += ["", "execs         edges_seen"]
    for execs, edges in coverage_series(rows):
        lines.append(f"{execs:<13} {edges}")
    return lines


def cmd_report(args) -> int:
    out = []
    for corpus in args.corpus:
        out += summarize(corpus) + [""]
    if len(args.corpus) == 2:
        a, b = (read_stats(c) for c in args.corpus)
        if a and b:
            ra, rb = parse_rates(a[-1]), parse_rates(b[-1])
            pa, pb = ra.get("parse_ok", 0.0), rb.get("parse_ok", 0.0)
            ratio = f"{pa / pb:.2f}x" if pb else "inf"
            modes = [read_fuzzer_stats(c).get("mode", "?") for c in args.corpus]
            out.append(f"parse_ok {modes[0]} {100 * pa:.2f}% vs {modes[1]} {100 * pb:.2f}% "
                       f"ratio {ratio}")
            out.append(f"unique bugs {modes[0]} {a[-1]['unique_crashes']} vs "
                       f"{modes[1]} {b[-1]['unique_crashes']}")
    print("\n".join(out).rstrip())
    return EXIT_OK


# -- plot ---------------------------------------------------------------------------


def cmd_plot(args) -> int:
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as exc:
        raise UsageError("plotting needs matplotlib (pip install tokfuzz[plot])") from exc
    fig, ax = plt.subplots(figsize=(6, 4))
    drawn = 0
    for corpus in args.corpus:
        rows = read_stats(corpus)
        if not rows:
            continue
        mode = read_fuzzer_stats(corpus).get("mode", Path(corpus).name)
        ax.plot([r["total_execs"] for r in rows], [r["edges_seen"] for r in rows],
                label=f"{mode} ({Path(corpus).name})")
        drawn += 1
    if not drawn:
        raise UsageError("no stats.csv data to plot")
    ax.set_xlabel("executions")
    ax.set_ylabel("edges seen")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output)
    print(f"wrote {args.output}")
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tokfuzz", description="Token-level greybox fuzzer.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def target_flags(p):
        p.add_argument("--target", default="minijs",
                       help="'minijs' (bundled server), 'inprocess', or a target command")
        p.add_argument("--timeout-ms", type=float, default=100.0)

    p = sub.add_parser("preprocess", help="lex and encode a seed directory")
    p.add_argument("--seeds", help="seed directory (default: bundled MiniJS seeds)")
    p.add_argument("--corpus", required=True)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--extra-tokens", help="file of extra tokens to add to the map")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("fuzz", help="run a campaign on a preprocessed corpus")
    p.add_argument("--corpus", required=True)
    target_flags(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-execs", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--mode", choices=["token", "byte"], default="token")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--no-walk", action="store_true", help="skip the deterministic token walk")
    p.add_argument("--shm-name", help=f"shared region name prefix (also ${SHM_NAME_ENV})")
    p.add_argument("-q", "--quiet", action="store_true", help="no live status line")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("replay", help="run one input and print its status")
    p.add_argument("input", help=".tok (needs --corpus) or program text file")
    p.add_argument("--corpus")
    target_flags(p)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("report", help="summarize one corpus, or compare two")
    p.add_argument("corpus", nargs="+")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("plot", help="plot edges over executions")
    p.add_argument("corpus", nargs="+")
    p.add_argument("-o", "--output", default="coverage.png")
    p.set_defaults(func=cmd_plot)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "shm_name", None):
        os.environ[SHM_NAME_ENV] = args.shm_name
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
