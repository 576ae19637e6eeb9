"""Acceptance criteria 1-10.

Each test prints one ``criterion N: PASS|FAIL`` line and then asserts.  The
campaign-backed criteria are slow (about 1.5 hours in total on one core);
skip them with ``-m "not acceptance"``.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest

from tokfuzz.codec import decode, encode
from tokfuzz.engine import BYTE, TOKEN, Campaign, EngineConfig, Limits
from tokfuzz.executor import TargetConfig, spawn
from tokfuzz.minijs.bugs import BUG_GC_SHIFT, BUG_SYNTAX_ASSIGN, BUG_TRAILING_EXPR, PLANTED_BUGS
from tokfuzz.mutator import (delete_run, duplicate_run, havoc, random_insert, random_overwrite,
                             random_replace, statement_splice, NoOp)
from tokfuzz.preproc import build_token_map, prepare_seed, preprocess_corpus, seed_rng
from tokfuzz.protocol import Status
from tokfuzz.tokens import CANONICAL_NUMBERS, lex, nearest_canonical

pytestmark = pytest.mark.acceptance

SEEDS = Path(__file__).resolve().parents[1] / "src" / "tokfuzz" / "seeds"
TARGET = TargetConfig(target_path="inprocess")
PLANTED = {b.bug_id for b in PLANTED_BUGS}

# Tolerances.
PARSE_RATIO_MIN = 2.0
CRIT1_EXECS = 200_000
CRIT2_EXECS = 1_000_000
CRIT2_SECONDS = 20 * 60
CRIT2_RUNS = 5
TOKEN_FINDS_MIN = 4
BYTE_FINDS_MAX = 1
GC_FINDS_MIN = 3
CRIT8_EXECS = 100_000
CRIT9_ARRAYS = 1_000_000
SAMPLES = 10_000


def verdict(capsys, n: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@dataclass
class Run:
    corpus: Path
    campaign: Campaign
    stats: object


def campaign(root: Path, name: str, mode: str, seed: int, limits: Limits, **cfg) -> Run:
    corpus = root / name
    preprocess_corpus(SEEDS, 0, corpus)
    c = Campaign(corpus, TARGET, EngineConfig(mode=mode, **cfg), rng_seed=seed, limits=limits)
    return Run(corpus, c, c.run())


def stats_rows(corpus: Path) -> list[dict[str, int]]:
    with open(corpus / "stats.csv", newline="") as fh:
        return [{k: int(v) for k, v in row.items()} for row in csv.DictReader(fh)]


@pytest.fixture(scope="module")
def root(tmp_path_factory):
    return tmp_path_factory.mktemp("acceptance")


@pytest.fixture(scope="module")
def parse_rate_runs(root):
    limits = Limits(max_execs=CRIT1_EXECS)
    return {mode: campaign(root, f"c1-{mode}", mode, 1, limits) for mode in (TOKEN, BYTE)}


@pytest.fixture(scope="module")
def bug_runs(root):
    limits = Limits(max_execs=CRIT2_EXECS, max_seconds=CRIT2_SECONDS)
    return {mode: [campaign(root, f"c2-{mode}-{s}", mode, 100 + s, limits)
                   for s in range(CRIT2_RUNS)]
            for mode in (TOKEN, BYTE)}


def found(runs: list[Run], bug_id: int) -> int:
    return sum(bug_id in r.campaign.store.bug_ids() for r in runs)


# -- 1 ---------------------------------------------------------------------------

def test_1_parse_rate_advantage(parse_rate_runs, capsys):
    tok = parse_rate_runs[TOKEN].stats
    byte = parse_rate_runs[BYTE].stats
    ratio = tok.parse_ok_rate / byte.parse_ok_rate if byte.parse_ok_rate else float("inf")
    verdict(capsys, 1, ratio >= PARSE_RATIO_MIN and tok.total_execs == byte.total_execs == CRIT1_EXECS,
            f"parse_ok token {tok.parse_ok_rate:.2%} vs byte {byte.parse_ok_rate:.2%}, "
            f"ratio {ratio:.2f}x (need >= {PARSE_RATIO_MIN}x) over {tok.total_execs} execs each")


# -- 2 ---------------------------------------------------------------------------

def test_2_syntax_bug_discovery(bug_runs, capsys):
    parts, ok = [], True
    for bug in (BUG_SYNTAX_ASSIGN, BUG_TRAILING_EXPR):
        t, b = found(bug_runs[TOKEN], bug), found(bug_runs[BYTE], bug)
        ok &= t >= TOKEN_FINDS_MIN and b <= BYTE_FINDS_MAX
        parts.append(f"bug {bug}: token {t}/{CRIT2_RUNS} byte {b}/{CRIT2_RUNS}")
    execs = [r.stats.total_execs for rs in bug_runs.values() for r in rs]
    verdict(capsys, 2, ok, "; ".join(parts) +
            f" (need token >= {TOKEN_FINDS_MIN}, byte <= {BYTE_FINDS_MAX}; "
            f"execs per run {min(execs)}..{max(execs)})")


# -- 3 ---------------------------------------------------------------------------

def test_3_deep_valid_bug_discovery(bug_runs, capsys):
    t = found(bug_runs[TOKEN], BUG_GC_SHIFT)
    verdict(capsys, 3, t >= GC_FINDS_MIN,
            f"bug {BUG_GC_SHIFT} found in {t}/{CRIT2_RUNS} token campaigns (need >= {GC_FINDS_MIN})")


# -- 4 ---------------------------------------------------------------------------

def test_4_round_trip(capsys):
    seqs = {p.name: prepare_seed(p.read_text(), seed_rng(0, p.name)) for p in sorted(SEEDS.glob("*.js"))}
    tmap = build_token_map(seqs.values())
    failures = [name for name, seq in seqs.items() if lex(decode(encode(seq, tmap), tmap)) != seq]
    verdict(capsys, 4, len(seqs) == 100 and not failures,
            f"{len(seqs)} seeds, {len(failures)} round-trip failures {failures[:5]}")


# -- 5 ---------------------------------------------------------------------------

def linear_scan(n: int) -> int:
    best = CANONICAL_NUMBERS[0]
    for v in CANONICAL_NUMBERS:
        if abs(n - v) < abs(n - best):
            best = v
    return best


def test_5_renumber_oracle(capsys):
    rng = random.Random(5)
    sample = [rng.randint(0, 1 << 33) for _ in range(SAMPLES)]
    pool = CANONICAL_NUMBERS
    ties = [(a + b) // 2 for a, b in zip(pool, pool[1:]) if (a + b) % 2 == 0]
    mismatches = [n for n in sample + ties if nearest_canonical(n) != linear_scan(n)]
    verdict(capsys, 5, not mismatches,
            f"{len(sample)} random + {len(ties)} tie points, {len(mismatches)} mismatches")


# -- 6 ---------------------------------------------------------------------------

def test_6_mutation_bounds(capsys):
    seqs = [prepare_seed(p.read_text(), seed_rng(0, p.name)) for p in sorted(SEEDS.glob("*.js"))]
    tmap = build_token_map(seqs)
    inputs = [encode(s, tmap) for s in seqs]
    semi = tmap.code_of[lex(";")[0]]
    m = len(tmap)
    rng = random.Random(6)
    bad: dict[str, int] = {}

    def check(name, ok):
        if not ok:
            bad[name] = bad.get(name, 0) + 1

    for _ in range(SAMPLES):
        x = rng.choice(inputs)
        out = random_insert(x, m, rng)
        check("insert", 1 <= len(out) - len(x) <= 3)
        out = random_overwrite(x, m, rng)
        diff = [i for i in range(len(x)) if out[i] != x[i]]
        check("overwrite", len(out) == len(x) and (not diff or diff[-1] - diff[0] < 3))
        out = random_replace(x, m, rng)
        check("replace", abs(len(out) - len(x)) <= 5)
        decode(out, tmap)
        for op in (delete_run, duplicate_run):
            decode(op(x, m, rng), tmap)
        try:
            decode(statement_splice(x, rng.choice(inputs), semi, rng), tmap)
        except NoOp:
            pass
        decode(havoc(x, lambda r: r.choice(inputs), m, semi, rng), tmap)
    verdict(capsys, 6, not bad,
            f"{SAMPLES} samples per strategy, violations {bad or 'none'}, all outputs decoded")


# -- 7 ---------------------------------------------------------------------------

def test_7_coverage_monotone_and_growing(parse_rate_runs, capsys):
    run = parse_rate_runs[TOKEN]
    edges = [r["edges_seen"] for r in stats_rows(run.corpus)]
    monotone = all(a <= b for a, b in zip(edges, edges[1:]))
    dry = run.stats.dry_run_edges
    verdict(capsys, 7, monotone and edges[-1] > dry,
            f"{len(edges)} rows, non-decreasing={monotone}, dry run {dry} -> final {edges[-1]} edges")


# -- 8 ---------------------------------------------------------------------------

def test_8_determinism(root, capsys):
    limits = Limits(max_execs=CRIT8_EXECS)
    a = campaign(root, "c8-a", TOKEN, 8, limits)
    b = campaign(root, "c8-b", TOKEN, 8, limits)
    cols = lambda run: [tuple(v for k, v in r.items() if k != "unix_millis") for r in stats_rows(run.corpus)]
    ids = lambda run: sorted(p.name for p in (run.corpus / "queue").iterdir())
    same_stats, same_queue = cols(a) == cols(b), ids(a) == ids(b)
    verdict(capsys, 8, same_stats and same_queue,
            f"stats rows identical={same_stats} ({len(cols(a))} rows), "
            f"queue ids identical={same_queue} ({len(ids(a))} entries)")


# -- 9 ---------------------------------------------------------------------------

def test_9_decode_totality(capsys):
    tmap, _ = preprocess_corpus(SEEDS, 0)
    gen = np.random.default_rng(9)
    valid = {int(s) for s in Status if s != Status.TIMEOUT}
    counts: dict[str, int] = {}
    failures = 0
    with spawn(TARGET) as target:
        for n in gen.integers(0, 513, size=CRIT9_ARRAYS):
            codes = gen.integers(0, 1 << 16, size=int(n)).tolist()
            try:
                res = target.run(decode(codes, tmap))
            except Exception:
                failures += 1
                continue
            if int(res.status) not in valid or (res.crashed and res.assertion_id not in PLANTED):
                failures += 1
            counts[res.status.label] = counts.get(res.status.label, 0) + 1
    verdict(capsys, 9, failures == 0 and sum(counts.values()) == CRIT9_ARRAYS,
            f"{CRIT9_ARRAYS} arrays, {failures} failures, statuses {dict(sorted(counts.items()))}")


# -- 10 --------------------------------------------------------------------------

def test_10_triage_exact(bug_runs, capsys):
    problems = []
    for mode, runs in bug_runs.items():
        for i, run in enumerate(runs):
            store = run.campaign.store
            ids = set(store.bug_ids())
            dirs = {p.name for p in (run.corpus / "crashes").iterdir()
                    if p.is_dir() and p.name != "timeout"} if (run.corpus / "crashes").exists() else set()
            last = stats_rows(run.corpus)[-1]["unique_crashes"]
            if not (run.stats.unique_crash_count == len(ids) == len(dirs) == last
                    and ids <= PLANTED and {str(x) for x in ids} == dirs):
                problems.append(f"{mode}#{i}: count {run.stats.unique_crash_count} ids {sorted(ids)} "
                                f"dirs {sorted(dirs)} csv {last}")
    verdict(capsys, 10, not problems,
            f"{sum(map(len, bug_runs.values()))} campaigns checked, mismatches {problems or 'none'}")
