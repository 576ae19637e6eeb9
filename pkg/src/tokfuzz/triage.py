"""Crash deduplication, crash store layout, and witness minimization.

Crashes are keyed by (assertion id, status).  Hangs go to a reserved
``timeout`` signature and are not counted as bugs.  Store layout::

    <corpus>/crashes/<assertion_id>/id_NNNN.tok   encoded witness (token mode)
    <corpus>/crashes/<assertion_id>/id_NNNN.js    decoded program text
    <corpus>/crashes/<assertion_id>/report.txt
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Sequence, TypeVar

from .preproc import write_codes
from .protocol import Status

T = TypeVar("T")


class Dedup(str, Enum):
    NEW_BUG = "new_bug"
    DUPLICATE = "duplicate"


class ReproFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class CrashSignature:
    assertion_id: int
    status: Status = Status.CRASH

    @property
    def dirname(self) -> str:
        return "timeout" if self.status == Status.TIMEOUT else str(self.assertion_id)

    @property
    def is_bug(self) -> bool:
        return self.status == Status.CRASH


TIMEOUT_SIGNATURE = CrashSignature(0, Status.TIMEOUT)


@dataclass
class CrashReport:
    signature: CrashSignature
    first_seen_exec: int
    witness: Sequence
    decoded_text: str
    minimized_witness: Sequence | None = None
    minimized_text: str | None = None
    hits: int = 1


class CrashStore:
    """Deduplicates crashes and persists witnesses under ``<corpus>/crashes``.

    ``render`` turns a witness into program text.  Witnesses that are lists
    of codes are also written as ``.tok`` files.
    """

    def __init__(self, corpus_dir: str | os.PathLike | None, render: Callable[[Sequence], str],
                 max_witnesses: int = 8):
        self.root = Path(corpus_dir) / "crashes" if corpus_dir is not None else None
        self.render = render
        self.max_witnesses = max_witnesses
        self.reports: dict[CrashSignature, CrashReport] = {}

    @property
    def unique_bugs(self) -> int:
        return sum(sig.is_bug for sig in self.reports)

    def bug_ids(self) -> list[int]:
        return sorted(sig.assertion_id for sig in self.reports if sig.is_bug)

    def dedup(self, status: Status, assertion_id: int | None, witness: Sequence,
              exec_no: int) -> Dedup:
        sig = TIMEOUT_SIGNATURE if status == Status.TIMEOUT else CrashSignature(assertion_id or 0)
        report = self.reports.get(sig)
        text = None
        if report is None:
            text = self.render(witness)
            report = self.reports[sig] = CrashReport(sig, exec_no, list(witness), text)
            verdict = Dedup.NEW_BUG
        else:
            report.hits += 1
            verdict = Dedup.DUPLICATE
        if self.root is not None and report.hits <= self.max_witnesses:
            self._save(sig, report.hits - 1, witness, text if text is not None else self.render(witness))
        return verdict

    def _save(self, sig: CrashSignature, n: int, witness: Sequence, text: str) -> None:
        d = self.root / sig.dirname
        d.mkdir(parents=True, exist_ok=True)
        if not isinstance(witness, (bytes, bytearray)):
            write_codes(d / f"id_{n:04d}.tok", witness)
        (d / f"id_{n:04d}.js").write_text(text, encoding="utf-8", errors="replace")

    def write_reports(self) -> None:
        if self.root is None:
            return
        for sig, rep in self.reports.items():
            d = self.root / sig.dirname
            d.mkdir(parents=True, exist_ok=True)
            kind = "timeout" if sig.status == Status.TIMEOUT else f"assertion {sig.assertion_id}"
            lines = [
                f"signature: {kind}",
                f"first_seen_exec: {rep.first_seen_exec}",
                f"hits: {rep.hits}",
                f"witness_tokens: {len(rep.witness)}",
                "witness:",
                rep.decoded_text,
            ]
            if rep.minimized_text is not None:
                lines += [f"minimized_tokens: {len(rep.minimized_witness)}", "minimized:",
                          rep.minimized_text]
                if not isinstance(rep.minimized_witness, (bytes, bytearray)):
                    write_codes(d / "minimized.tok", rep.minimized_witness)
            (d / "report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8",
                                          errors="replace")


def _statement_chunks(seq: Sequence, is_boundary: Callable[[object], bool]) -> list[tuple[int, int]]:
    """[start, end) spans of statements, each including its terminating boundary."""
    spans = []
    start = 0
    for i, unit in enumerate(seq):
        if is_boundary(unit):
            spans.append((start, i + 1))
            start = i + 1
    if start < len(seq):
        spans.append((start, len(seq)))
    return spans


def minimize(witness: Sequence[T], reproduces: Callable[[list[T]], bool],
             is_boundary: Callable[[T], bool] | None = None) -> list[T]:
    """Greedy reduction to a fixed point that still satisfies ``reproduces``.

    Each round first tries dropping whole statements (largest first), then
    runs of units with power-of-two lengths down to one.  The loop ends when a
    round removes nothing, so the result is 1-minimal: no single unit can be
    removed without losing the reproduction.
    """
    current = list(witness)
    if not reproduces(current):
        raise ReproFailure("witness does not reproduce")
    changed = True
    while changed:
        changed = False
        if is_boundary is not None:
            spans = sorted(_statement_chunks(current, is_boundary),
                           key=lambda s: (s[0] - s[1], s[0]))
            for a, b in spans:
                cand = current[:a] + current[b:]
                if reproduces(cand):
                    current = cand
                    changed = True
                    break
            if changed:
                continue
        length = 1
        while length * 2 <= max(1, len(current) // 2):
            length *= 2
        while length >= 1:
            pos = 0
            while pos < len(current):
                cand = current[:pos] + current[pos + length:]
                if len(cand) < len(current) and reproduces(cand):
                    current = cand
                    changed = True
                else:
                    pos += length
            length //= 2
    return current
