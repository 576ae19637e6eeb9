import csv

import numpy as np
import pytest

from tokfuzz.coverage import CoverageMap, Novelty
from tokfuzz.engine import (
    BYTE, STATS_HEADER, Campaign, CorpusEntry, EngineConfig, Limits, energy, trim_input,
)
from tokfuzz.executor import ExecResult, InProcessTarget, SpawnFailure, TargetConfig
from tokfuzz.preproc import preprocess_corpus
from tokfuzz.protocol import Status
from tokfuzz.tokens import lex, render

INPROC = TargetConfig(target_path="inprocess")


def entry(cost, novelty=Novelty.NEW_EDGE, **kw):
    return CorpusEntry(id=0, input=[0], exec_micros=1, token_len=1, novelty=novelty, cost=cost, **kw)


def test_energy_formula():
    assert energy(entry(100), 100) == 512
    assert energy(entry(1000, Novelty.NEW_BUCKET), 100) == 64
    assert energy(entry(10), 100) == 2048
    assert energy(entry(1000, Novelty.NEW_BUCKET), 100, EngineConfig(energy_base=32)) == 16
    assert energy(entry(1), 100, EngineConfig(energy_base=1024)) == 4096


def run_tokens(target):
    def run(toks):
        return target.run(render(toks))
    return run


def test_trim_drops_dead_trailing_statement():
    target = InProcessTarget(INPROC)
    # Twenty identical statements: counts 16..31 share a bucket, so four are dead weight.
    toks = lex("let var1 ; ; " + "var1 = 1 ; " * 20)
    base = target.run(render(toks))
    trimmed, last = trim_input(toks, run_tokens(target), base.trace.signature())
    assert len(trimmed) <= len(toks) - 4
    assert render(trimmed).startswith("let var1 ; ; var1 = 1 ;")
    assert last.trace.signature() == base.trace.signature()
    again, _ = trim_input(trimmed, run_tokens(target), base.trace.signature())
    assert again == trimmed


def test_trim_leaves_single_token():
    target = InProcessTarget(INPROC)
    toks = lex(";")
    res = target.run(";")
    assert trim_input(toks, run_tokens(target), res.trace.signature())[0] == toks


def make_campaign(corpus, **kw):
    limits = kw.pop("limits", Limits(max_execs=0))
    config = kw.pop("config", EngineConfig())
    return Campaign(corpus, kw.pop("target", INPROC), config, limits=limits, **kw)


def fake_result(edges, steps=10):
    return ExecResult(Status.PARSE_OK, CoverageMap.from_counts({e: 1 for e in edges}), None, 1, steps)


def test_select_next_single_entry(corpus):
    c = make_campaign(corpus)
    e = c.add_entry([1, 2], fake_result([5]), Novelty.NEW_EDGE, seed=True)
    import random
    rng = random.Random(0)
    assert all(c.select_next(rng) is e for _ in range(5))


def test_select_next_round_robin_when_all_favored(corpus):
    c = make_campaign(corpus)
    a = c.add_entry([1], fake_result([5]), Novelty.NEW_EDGE, seed=True)
    b = c.add_entry([2], fake_result([6]), Novelty.NEW_EDGE, seed=True)
    import random
    rng = random.Random(0)
    assert [c.select_next(rng) for _ in range(4)] == [a, b, a, b]


def test_favored_switches_to_cheaper_equivalent(corpus):
    c = make_campaign(corpus)
    slow = c.add_entry([1, 2, 3], fake_result([5, 6], steps=500), Novelty.NEW_EDGE)
    assert slow.favored
    fast = c.add_entry([1], fake_result([5, 6], steps=1), Novelty.NEW_BUCKET)
    assert fast.favored and not slow.favored


def test_nonfavored_skipped_most_of_the_time(corpus):
    c = make_campaign(corpus)
    c.add_entry([1, 2, 3], fake_result([5], steps=500), Novelty.NEW_EDGE)
    fav = c.add_entry([1], fake_result([5, 6], steps=1), Novelty.NEW_EDGE)
    import random
    rng = random.Random(1)
    picks = [c.select_next(rng) for _ in range(2000)]
    share = sum(p is not fav for p in picks) / len(picks)
    assert 0.1 < share < 0.25


def read_rows(corpus):
    with open(corpus / "stats.csv", newline="") as fh:
        return list(csv.reader(fh))


def test_zero_limit_run_is_dry_run_only(corpus):
    c = make_campaign(corpus)
    stats = c.run()
    assert stats.total_execs == stats.dry_run_execs == 100
    assert len(c.queue) == 100 and all(e.seed for e in c.queue)
    rows = read_rows(corpus)
    assert rows[0] == STATS_HEADER
    assert int(rows[-1][1]) == 100
    assert stats.edges_seen == stats.dry_run_edges > 0


def test_zero_coverage_seed_is_dropped(tmp_path):
    seeds = tmp_path / "seeds"
    seeds.mkdir()
    (seeds / "a.js").write_text("let x = 1 ;")
    (seeds / "b.js").write_text("")
    (seeds / "c.js").write_text("// only a comment\n")
    preprocess_corpus(seeds, 0, tmp_path / "c")
    c = make_campaign(tmp_path / "c")
    c.run()
    assert len(c.queue) == 1


def campaign_run(corpus, seed, n=4000, **kw):
    c = make_campaign(corpus, rng_seed=seed, limits=Limits(max_execs=n), **kw)
    stats = c.run()
    return c, stats


def test_campaign_invariants(corpus):
    c, stats = campaign_run(corpus, 1)
    assert stats.total_execs == 4000
    assert (stats.parse_ok_count + stats.parse_error_count + stats.runtime_error_count
            + stats.crash_count + stats.timeout_count) == stats.total_execs
    assert all(e.novelty in (Novelty.NEW_EDGE, Novelty.NEW_BUCKET) for e in c.queue)
    assert len(c.queue) > 100
    ids = [e.id for e in c.queue]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    rows = read_rows(corpus)[1:]
    edges = [int(r[-1]) for r in rows]
    assert edges == sorted(edges)
    assert stats.edges_seen > stats.dry_run_edges
    assert all(e.token_len == len(e.input) for e in c.queue)


def test_single_worker_is_deterministic(tmp_path):
    outs = []
    for name in ("a", "b"):
        d = tmp_path / name
        preprocess_corpus(__import__("conftest").BUNDLED_SEEDS, 0, d)
        campaign_run(d, 5, 3000)
        cols = [r[1:] for r in read_rows(d)]
        queue = {p.name: p.read_bytes() for p in (d / "queue").iterdir()}
        outs.append((cols, queue))
    assert outs[0] == outs[1]


def test_byte_mode_runs(corpus):
    c, stats = campaign_run(corpus, 2, 3000, config=EngineConfig(mode=BYTE))
    assert stats.total_execs == 3000
    assert any(p.suffix == ".js" for p in (corpus / "queue").iterdir())
    assert all(isinstance(e.input, bytes) for e in c.queue)


def test_two_workers(corpus):
    c, stats = campaign_run(corpus, 3, 3000, workers=2)
    assert stats.total_execs == 3000


def test_spawn_failure_aborts(corpus):
    with pytest.raises(SpawnFailure):
        make_campaign(corpus, target=TargetConfig(target_path="/nonexistent/target")).run()


def test_crash_is_triaged_and_minimized(tmp_path):
    seeds = tmp_path / "seeds"
    seeds.mkdir()
    (seeds / "a.js").write_text("let o = { k : 5 } ; o . k = 7 ; print ( o . k ) ;")
    tmap, encoded = preprocess_corpus(seeds, 0, tmp_path / "c")
    c = make_campaign(tmp_path / "c", limits=Limits(max_execs=100))
    worker = c.make_worker(0)
    colon = tmap.code_of[lex(":")[0]]
    witness = [tmap.code_of[lex("=")[0]] if x == colon else x for x in encoded[0]]
    res = c.execute(worker, witness)
    assert (res.status, res.assertion_id) == (Status.CRASH, 1)
    c.minimize_crashes(worker)
    c.store.write_reports()
    rep = next(iter(c.store.reports.values()))
    assert len(rep.minimized_witness) < len(witness)
    assert worker.target.run(rep.minimized_text).assertion_id == 1
    assert (tmp_path / "c" / "crashes" / "1" / "report.txt").exists()
    assert c.store.unique_bugs == 1
