"""The evolutionary fuzzing loop.

One :class:`Campaign` owns the queue, global coverage, statistics and crash
store.  Worker threads each drive their own target handle and rng stream;
everything that touches shared state goes through a single lock.  With one
worker the whole campaign is a deterministic function of the rng seed.

Scheduling uses a deterministic execution cost (interpreter steps plus input
length, as reported by the target) wherever AFL would use wall-clock time,
so queue contents do not depend on machine load.  Measured wall-clock
microseconds are still recorded per entry.
"""

from __future__ import annotations

import bisect
import csv
import logging
import os
import random
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import mutator
from .bytemut import make_byte_mutator
from .codec import decode
from .coverage import BUCKET_LUT, MAP_SIZE, CoverageMap, GlobalCoverage, Novelty
from .executor import ExecResult, SpawnFailure, TargetConfig, spawn
from .preproc import TokenMap, read_codes, write_codes
from .protocol import Status
from .tokens import Kind, lex
from .triage import CrashStore, Dedup, minimize

log = logging.getLogger(__name__)

TOKEN = "token"
BYTE = "byte"

STATS_HEADER = ["unix_millis", "total_execs", "parse_ok", "parse_error", "crashes",
                "unique_crashes", "edges_seen"]

NOVELTY_WEIGHT = {Novelty.NEW_EDGE: 2, Novelty.NEW_BUCKET: 1}


@dataclass
class CorpusEntry:
    id: int
    input: list[int] | bytes
    exec_micros: int
    token_len: int
    novelty: Novelty
    favored: bool = False
    times_fuzzed: int = 0
    cost: int = 1
    edges: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64), repr=False)
    walked: bool = False
    seed: bool = False

    @property
    def score(self) -> int:
        return self.cost * max(1, self.token_len)


@dataclass
class CampaignStats:
    total_execs: int = 0
    parse_ok_count: int = 0
    parse_error_count: int = 0
    runtime_error_count: int = 0
    crash_count: int = 0
    timeout_count: int = 0
    unique_crash_count: int = 0
    edges_seen: int = 0
    dry_run_execs: int = 0
    dry_run_edges: int = 0
    start_time: float = field(default_factory=time.time)

    def record(self, status: Status) -> None:
        self.total_execs += 1
        if status == Status.PARSE_OK:
            self.parse_ok_count += 1
        elif status == Status.PARSE_ERROR:
            self.parse_error_count += 1
        elif status == Status.RUNTIME_ERROR:
            self.runtime_error_count += 1
        elif status == Status.CRASH:
            self.crash_count += 1
        else:
            self.timeout_count += 1

    @property
    def parse_ok_rate(self) -> float:
        return self.parse_ok_count / self.total_execs if self.total_execs else 0.0

    @property
    def parsed_rate(self) -> float:
        """Fraction of executions that got past the parser."""
        if not self.total_execs:
            return 0.0
        return (self.parse_ok_count + self.runtime_error_count + self.crash_count) / self.total_execs

    def row(self) -> list[int]:
        return [int(time.time() * 1000), self.total_execs, self.parse_ok_count,
                self.parse_error_count, self.crash_count, self.unique_crash_count,
                self.edges_seen]


@dataclass
class Limits:
    max_execs: int | None = None
    max_seconds: float | None = None


@dataclass
class EngineConfig:
    mode: str = TOKEN
    walk: bool = True
    walk_k: int = 16
    budget: mutator.MutationBudget = mutator.DEFAULT_BUDGET
    energy_base: int = 256
    energy_min: int = 16
    energy_max: int = 4096
    skip_nonfavored: float = 0.75
    trim: bool = True
    stats_every_execs: int = 1000
    minimize_crashes: bool = True
    max_crash_witnesses: int = 8
    splice_prob: float = 0.2

    def __post_init__(self):
        if self.mode not in (TOKEN, BYTE):
            raise ValueError(f"unknown mode {self.mode!r}")


def energy(entry: CorpusEntry, median_cost: float, config: EngineConfig = EngineConfig()) -> int:
    """Havoc iterations for one round on ``entry``."""
    speed = median_cost / max(entry.cost, 1)
    speed = min(4.0, max(0.25, speed))
    value = NOVELTY_WEIGHT[entry.novelty] * speed * config.energy_base
    return int(min(config.energy_max, max(config.energy_min, value)))


def exec_cost(result: ExecResult, length: int) -> int:
    return int(result.steps) + length


def trim_input(data: Sequence, run: Callable[[Sequence], ExecResult | None],
               signature: bytes, min_len: int = 1) -> tuple[Sequence, ExecResult | None]:
    """Remove runs while the bucketized coverage signature stays the same.

    Run lengths go from the largest power of two not above len/16 down to
    ``min_len``; passes repeat until one removes nothing.  ``run`` returns
    None when the exec budget is exhausted, which ends trimming early.
    Returns the trimmed input and the result of its last accepted run.
    """
    current = data
    last = None
    changed = True
    while changed and len(current) > 1:
        changed = False
        length = 1
        while length * 2 <= len(current) // 16:
            length *= 2
        while length >= min_len:
            pos = 0
            while pos < len(current) and len(current) > length:
                cand = current[:pos] + current[pos + length:]
                res = run(cand)
                if res is None:
                    return current, last
                if res.status != Status.CRASH and res.status != Status.TIMEOUT \
                        and res.trace.signature() == signature:
                    current = cand
                    last = res
                    changed = True
                else:
                    pos += length
            length //= 2
    return current, last


class Worker:
    def __init__(self, index: int, target, rng: random.Random):
        self.index = index
        self.target = target
        self.rng = rng


class AbortCampaign(RuntimeError):
    pass


class Campaign:
    """A fuzzing campaign over one corpus directory."""

    def __init__(self, corpus_dir: str | os.PathLike, target_config: TargetConfig,
                 config: EngineConfig = EngineConfig(), rng_seed: int = 0,
                 limits: Limits = Limits(), workers: int = 1, tmap: TokenMap | None = None,
                 seeds: Sequence | None = None, status_callback: Callable[["Campaign"], None] | None = None):
        self.corpus = Path(corpus_dir)
        self.target_config = target_config
        self.config = config
        self.rng_seed = rng_seed
        self.limits = limits
        self.n_workers = max(1, workers)
        self.status_callback = status_callback
        self.tmap = tmap if tmap is not None else TokenMap.load(self.corpus / "tokenmap.txt")
        self.map_size = target_config.map_size
        self.mode = config.mode
        self.semicolon = self.tmap.code(Kind.PUNCT, ";")
        self.queue: list[CorpusEntry] = []
        self.global_cov = GlobalCoverage(self.map_size)
        self.stats = CampaignStats()
        self.lock = threading.RLock()
        self.cursor = 0
        self.next_id = 0
        self.costs: list[int] = []
        self.top_entry = np.full(self.map_size, -1, dtype=np.int64)
        self.top_score = np.full(self.map_size, np.iinfo(np.int64).max, dtype=np.int64)
        self.by_id: dict[int, CorpusEntry] = {}
        self.any_favored = False
        self.stop = threading.Event()
        self.abort_reason: str | None = None
        self.store = CrashStore(self.corpus, self.render, config.max_crash_witnesses)
        self.queue_dir = self.corpus / "queue"
        self.queue_dir.mkdir(parents=True, exist_ok=True)
        self.stats_path = self.corpus / "stats.csv"
        self.started = 0.0
        self.issued = 0  # execs handed out; equals total_execs once workers settle
        self._initial = seeds
        if self.mode == BYTE:
            self.dictionary = sorted({t.text.encode("utf-8") for t in self.tmap.entries})
            self.byte_mutate = make_byte_mutator(self.dictionary, self._byte_donor, config.splice_prob)

    # -- representation helpers ----------------------------------------------------

    def render(self, data: Sequence) -> str:
        if isinstance(data, (bytes, bytearray)):
            return bytes(data).decode("utf-8", errors="replace")
        return decode(data, self.tmap)

    def program(self, data: Sequence) -> bytes | str:
        if isinstance(data, (bytes, bytearray)):
            return bytes(data)
        return decode(data, self.tmap)

    def _byte_donor(self, rng: random.Random) -> bytes:
        return self.queue[rng.randrange(len(self.queue))].input

    def _token_donor(self, rng: random.Random) -> list[int]:
        return self.queue[rng.randrange(len(self.queue))].input

    # -- corpus loading -------------------------------------------------------------

    def load_initial(self) -> list[tuple[int, Sequence]]:
        """(id, input) pairs from the queue directory, in id order."""
        if self._initial is not None:
            items = list(enumerate(self._initial))
        else:
            items = []
            for path in sorted(self.queue_dir.glob("id_*")):
                try:
                    qid = int(path.stem[3:])
                except ValueError:
                    continue
                if path.suffix == ".tok":
                    codes = read_codes(path)
                    items.append((qid, codes if self.mode == TOKEN
                                  else decode(codes, self.tmap).encode("utf-8")))
                elif path.suffix == ".js" and self.mode == BYTE:
                    items.append((qid, path.read_bytes()))
        if not items:
            raise AbortCampaign(f"no inputs in {self.queue_dir}")
        return items

    def save_entry(self, entry: CorpusEntry) -> None:
        if self.mode == TOKEN:
            write_codes(self.queue_dir / f"id_{entry.id:06d}.tok", entry.input)
        else:
            (self.queue_dir / f"id_{entry.id:06d}.js").write_bytes(entry.input)

    # -- limits and stats -------------------------------------------------------------

    def budget_left(self) -> bool:
        if self.stop.is_set():
            return False
        lim = self.limits
        if lim.max_execs is not None and self.issued >= lim.max_execs:
            return False
        if lim.max_seconds is not None and time.monotonic() - self.started >= lim.max_seconds:
            return False
        return True

    def _stats_file(self):
        new = not self.stats_path.exists() or self.stats_path.stat().st_size == 0
        fh = open(self.stats_path, "a", newline="")
        if new:
            csv.writer(fh).writerow(STATS_HEADER)
        return fh

    def checkpoint(self) -> None:
        self.stats.edges_seen = self.global_cov.edges_seen
        self.stats.unique_crash_count = self.store.unique_bugs
        with self._stats_file() as fh:
            csv.writer(fh).writerow(self.stats.row())
        self.write_fuzzer_stats()
        if self.status_callback is not None:
            self.status_callback(self)

    def write_fuzzer_stats(self) -> None:
        s = self.stats
        lines = {
            "mode": self.mode,
            "rng_seed": self.rng_seed,
            "total_execs": s.total_execs,
            "parse_ok": s.parse_ok_count,
            "parse_error": s.parse_error_count,
            "runtime_error": s.runtime_error_count,
            "crashes": s.crash_count,
            "timeouts": s.timeout_count,
            "unique_crashes": s.unique_crash_count,
            "bug_ids": ",".join(str(b) for b in self.store.bug_ids()),
            "edges_seen": s.edges_seen,
            "dry_run_execs": s.dry_run_execs,
            "dry_run_edges": s.dry_run_edges,
            "queue_size": len(self.queue),
        }
        text = "".join(f"{k:<16}: {v}\n" for k, v in lines.items())
        (self.corpus / "fuzzer_stats").write_text(text)

    # -- execution ----------------------------------------------------------------------

    def execute(self, worker: Worker, data: Sequence, dry: bool = False) -> ExecResult | None:
        """Run one input and account for it; None when the budget is exhausted."""
        with self.lock:
            if not dry and not self.budget_left():
                return None
            self.issued += 1
        try:
            result = worker.target.run(self.program(data))
        except SpawnFailure as exc:
            self.abort_reason = str(exc)
            self.stop.set()
            return None
        with self.lock:
            self.stats.record(result.status)
            if result.status in (Status.CRASH, Status.TIMEOUT):
                verdict = self.store.dedup(result.status, result.assertion_id, data,
                                           self.stats.total_execs)
                if verdict == Dedup.NEW_BUG and result.status == Status.CRASH:
                    log.info("new bug: assertion %s at exec %d", result.assertion_id,
                             self.stats.total_execs)
                self.stats.unique_crash_count = self.store.unique_bugs
            if self.stats.total_execs % self.config.stats_every_execs == 0:
                self.checkpoint()
        return result

    def add_entry(self, data: Sequence, result: ExecResult, novelty: Novelty,
                  qid: int | None = None, seed: bool = False) -> CorpusEntry:
        with self.lock:
            if qid is None:
                qid = self.next_id
            self.next_id = max(self.next_id, qid + 1)
            entry = CorpusEntry(
                id=qid, input=data, exec_micros=result.exec_micros, token_len=len(data),
                novelty=novelty, cost=exec_cost(result, len(data)),
                edges=result.trace.edges(), seed=seed)
            self.queue.append(entry)
            self.by_id[qid] = entry
            bisect.insort(self.costs, entry.cost)
            if not seed:
                self.save_entry(entry)
            self.update_favored(entry)
            return entry

    def median_cost(self) -> float:
        c = self.costs
        if not c:
            return 1.0
        n = len(c)
        return c[n // 2] if n % 2 else (c[n // 2 - 1] + c[n // 2]) / 2

    def update_favored(self, entry: CorpusEntry | None = None) -> None:
        """Refresh per-edge best entries and recompute the favored cover."""
        if entry is not None and len(entry.edges):
            edges = entry.edges
            better = entry.score < self.top_score[edges]
            self.top_score[edges[better]] = entry.score
            self.top_entry[edges[better]] = entry.id
        for e in self.queue:
            e.favored = False
        covered = np.zeros(self.map_size, dtype=bool)
        owners = self.top_entry
        for edge in np.flatnonzero(owners >= 0):
            if covered[edge]:
                continue
            best = self.by_id[int(owners[edge])]
            best.favored = True
            covered[best.edges] = True
        self.any_favored = any(e.favored for e in self.queue)

    def select_next(self, rng: random.Random) -> CorpusEntry:
        with self.lock:
            n = len(self.queue)
            while True:
                entry = self.queue[self.cursor % n]
                self.cursor = (self.cursor + 1) % n
                if self.any_favored and not entry.favored \
                        and rng.random() < self.config.skip_nonfavored:
                    continue
                return entry

    def trim(self, worker: Worker, data: Sequence, result: ExecResult) -> tuple[Sequence, ExecResult]:
        if not self.config.trim or len(data) <= 1:
            return data, result
        sig = result.trace.signature()
        min_len = 1 if self.mode == TOKEN else 4
        trimmed, last = trim_input(data, lambda cand: self.execute(worker, cand), sig, min_len)
        if last is None:
            return data, result
        return trimmed, last

    def consider(self, worker: Worker, data: Sequence, result: ExecResult) -> None:
        if result.status in (Status.CRASH, Status.TIMEOUT):
            return
        with self.lock:
            novelty = self.global_cov.has_new_bits(result.trace)
            self.stats.edges_seen = self.global_cov.edges_seen
        if novelty == Novelty.NOTHING:
            return
        data, result = self.trim(worker, data, result)
        self.add_entry(data, result, novelty)

    # -- phases -------------------------------------------------------------------------------

    def dry_run(self, worker: Worker) -> None:
        for qid, data in self.load_initial():
            result = self.execute(worker, data, dry=True)
            if result is None:
                raise AbortCampaign(self.abort_reason or "target failure during dry run")
            self.stats.dry_run_execs += 1
            if result.status in (Status.CRASH, Status.TIMEOUT):
                log.warning("seed %d %s during dry run; dropped", qid, result.status.label)
                continue
            if not len(result.trace.edges()):
                log.warning("seed %d has no coverage; dropped", qid)
                continue
            novelty = self.global_cov.has_new_bits(result.trace)
            if novelty == Novelty.NOTHING:
                novelty = Novelty.NEW_BUCKET
            self.add_entry(data, result, novelty, qid=qid, seed=True)
        self.stats.edges_seen = self.global_cov.edges_seen
        self.stats.dry_run_edges = self.global_cov.edges_seen
        if not self.queue:
            raise AbortCampaign("no seed survived the dry run")

    def mutants(self, worker: Worker, entry: CorpusEntry):
        rng = worker.rng
        if self.mode == TOKEN:
            n = len(self.tmap)
            if self.config.walk and not entry.walked:
                entry.walked = True
                yield from mutator.deterministic_walk(entry.input, n, self.config.walk_k)
            for _ in range(energy(entry, self.median_cost(), self.config)):
                yield mutator.havoc(entry.input, self._token_donor, n, self.semicolon, rng,
                                    self.config.budget)
        else:
            cycle = 1 + self.cursor_cycles
            for _ in range(energy(entry, self.median_cost(), self.config)):
                yield self.byte_mutate(entry.input, rng, cycle)

    @property
    def cursor_cycles(self) -> int:
        return self.stats.total_execs // max(1, len(self.queue) * self.config.energy_base)

    def worker_loop(self, worker: Worker) -> None:
        while self.budget_left():
            entry = self.select_next(worker.rng)
            for data in self.mutants(worker, entry):
                result = self.execute(worker, data)
                if result is None:
                    return
                self.consider(worker, data, result)
            entry.times_fuzzed += 1

    def make_worker(self, index: int) -> Worker:
        target = spawn(self.target_config)
        rng = random.Random(f"{self.rng_seed}/worker{index}")
        return Worker(index, target, rng)

    def run(self) -> CampaignStats:
        self.started = time.monotonic()
        self.stats.start_time = time.time()
        workers = [self.make_worker(0)]
        try:
            self.dry_run(workers[0])
            self.checkpoint()
            workers += [self.make_worker(i) for i in range(1, self.n_workers)]
            if len(workers) == 1:
                self.worker_loop(workers[0])
            else:
                threads = [threading.Thread(target=self.worker_loop, args=(w,), daemon=True)
                           for w in workers]
                for t in threads:
                    t.start()
                for t in threads:
                    t.join()
            if self.config.minimize_crashes:
                self.minimize_crashes(workers[0])
        finally:
            self.checkpoint()
            self.store.write_reports()
            for w in workers:
                w.target.close()
        if self.abort_reason:
            raise SpawnFailure(self.abort_reason)
        return self.stats

    # -- triage ---------------------------------------------------------------------------------

    def minimize_crashes(self, worker: Worker) -> None:
        """Minimize each bug's first witness; these runs are not counted as campaign execs."""
        target = worker.target
        for sig, rep in self.store.reports.items():
            if not sig.is_bug:
                continue
            units, render, boundary = self._minimize_units(rep.witness)
            if units is None:
                continue

            def reproduces(cand, sig=sig, render=render):
                res = target.run(render(cand))
                return res.status == Status.CRASH and res.assertion_id == sig.assertion_id

            try:
                small = minimize(units, reproduces, boundary)
            except Exception as exc:
                log.warning("minimization of %s failed: %s", sig, exc)
                continue
            text = render(small)
            rep.minimized_text = text if isinstance(text, str) else text.decode("utf-8", "replace")
            rep.minimized_witness = small if self.mode == TOKEN else rep.minimized_text.encode("utf-8")

    def _minimize_units(self, witness):
        if self.mode == TOKEN:
            n = len(self.tmap)
            semi = self.semicolon
            return list(witness), lambda c: decode(c, self.tmap), \
                (lambda u: u % n == semi) if semi is not None else None
        try:
            toks = lex(bytes(witness).decode("utf-8", errors="replace"))
        except Exception:
            return None, None, None
        from .tokens import render as render_tokens
        return toks, render_tokens, lambda t: t.kind is Kind.PUNCT and t.text == ";"
