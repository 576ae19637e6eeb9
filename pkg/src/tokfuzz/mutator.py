"""Token-level mutation strategies over encoded inputs.

Inputs are plain lists of ints (token codes).  Every strategy returns a new
list and never touches its argument.  New codes are drawn uniformly from
``range(map_size)``; out-of-range codes are tolerated downstream because
decoding wraps them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

MAX_INPUT_TOKENS = 4096


class NoOp(Exception):
    """Strategy is not applicable to this input."""


@dataclass(frozen=True)
class MutationBudget:
    max_run: int = 3
    # Deeper stacks mostly break syntax: from the bundled seeds, one round
    # of depth <= 8 leaves 0.8% of mutants parsing, depth <= 2 about 3%.
    havoc_stack_max: int = 2

    def __post_init__(self):
        if self.max_run < 1:
            raise ValueError("max_run must be positive")
        m = self.havoc_stack_max
        if m < 2 or m & (m - 1):
            raise ValueError("havoc_stack_max must be a power of two >= 2")


DEFAULT_BUDGET = MutationBudget()


def _fresh(rng: random.Random, map_size: int, r: int) -> list[int]:
    return [rng.randrange(map_size) for _ in range(r)]


def random_insert(codes: Sequence[int], map_size: int, rng: random.Random,
                  max_run: int = 3) -> list[int]:
    r = rng.randint(1, max_run)
    pos = rng.randint(0, len(codes))
    return [*codes[:pos], *_fresh(rng, map_size, r), *codes[pos:]]


def random_overwrite(codes: Sequence[int], map_size: int, rng: random.Random,
                     max_run: int = 3) -> list[int]:
    if not codes:
        raise NoOp("overwrite of empty input")
    r = rng.randint(1, min(max_run, len(codes)))
    pos = rng.randint(0, len(codes) - r)
    out = list(codes)
    out[pos:pos + r] = _fresh(rng, map_size, r)
    return out


def random_replace(codes: Sequence[int], map_size: int, rng: random.Random,
                   max_run: int = 3) -> list[int]:
    if not codes:
        raise NoOp("replace in empty input")
    r_out = rng.randint(1, min(max_run, len(codes)))
    r_in = rng.randint(1, max_run)
    pos = rng.randint(0, len(codes) - r_out)
    return [*codes[:pos], *_fresh(rng, map_size, r_in), *codes[pos + r_out:]]


def delete_run(codes: Sequence[int], map_size: int, rng: random.Random,
               max_run: int = 3) -> list[int]:
    if len(codes) < 2:
        raise NoOp("nothing to delete")
    r = rng.randint(1, min(max_run, len(codes) - 1))
    pos = rng.randint(0, len(codes) - r)
    return [*codes[:pos], *codes[pos + r:]]


def duplicate_run(codes: Sequence[int], map_size: int, rng: random.Random,
                  max_run: int = 3) -> list[int]:
    if not codes:
        raise NoOp("nothing to duplicate")
    r = rng.randint(1, min(max_run, len(codes)))
    src = rng.randint(0, len(codes) - r)
    dst = rng.randint(0, len(codes))
    return [*codes[:dst], *codes[src:src + r], *codes[dst:]]


def statement_spans(codes: Sequence[int], semicolon: int | None) -> list[tuple[int, int]]:
    """Non-empty [start, end) spans between semicolons; input ends count as boundaries."""
    spans = []
    start = 0
    if semicolon is not None:
        for i, c in enumerate(codes):
            if c == semicolon:
                if i > start:
                    spans.append((start, i))
                start = i + 1
    if len(codes) > start:
        spans.append((start, len(codes)))
    return spans


def statement_splice(codes: Sequence[int], donor: Sequence[int], semicolon: int | None,
                     rng: random.Random) -> list[int]:
    """Replace one statement of *codes* with one statement of *donor*."""
    mine = statement_spans(codes, semicolon)
    theirs = statement_spans(donor, semicolon)
    if not mine or not theirs:
        raise NoOp("no statement to splice")
    a, b = mine[rng.randrange(len(mine))]
    c, d = theirs[rng.randrange(len(theirs))]
    return [*codes[:a], *donor[c:d], *codes[b:]]


# Names of the havoc operations, in draw order.
HAVOC_OPS = ("insert", "overwrite", "replace", "splice", "delete", "duplicate")

_SIMPLE_OPS: dict[str, Callable[..., list[int]]] = {
    "insert": random_insert,
    "overwrite": random_overwrite,
    "replace": random_replace,
    "delete": delete_run,
    "duplicate": duplicate_run,
}


def havoc(codes: Sequence[int], sample_donor: Callable[[random.Random], Sequence[int]],
          map_size: int, semicolon: int | None, rng: random.Random,
          budget: MutationBudget = DEFAULT_BUDGET, trail: list[str] | None = None) -> list[int]:
    """Apply a uniformly sized stack of uniformly drawn token operations.

    ``sample_donor(rng)`` returns another corpus input for statement
    splicing.  A splice with no eligible statement falls back to
    random_replace; other inapplicable operations are skipped.  Names of
    the applied operations are appended to ``trail`` when given.
    """
    out = list(codes)
    for _ in range(rng.randint(1, budget.havoc_stack_max)):
        op = HAVOC_OPS[rng.randrange(len(HAVOC_OPS))]
        try:
            if op == "splice":
                try:
                    out = statement_splice(out, sample_donor(rng), semicolon, rng)
                except NoOp:
                    op = "replace"
                    out = random_replace(out, map_size, rng, budget.max_run)
            else:
                out = _SIMPLE_OPS[op](out, map_size, rng, budget.max_run)
        except NoOp:
            continue
        if trail is not None:
            trail.append(op)
    if not out:
        out = _fresh(rng, map_size, 1)
    if len(out) > MAX_INPUT_TOKENS:
        del out[MAX_INPUT_TOKENS:]
    return out


def walk_codes(map_size: int, k: int) -> list[int]:
    """k evenly spaced distinct codes covering the map."""
    if k < 1:
        raise ValueError("k must be >= 1")
    stride = max(1, math.ceil(map_size / k))
    return list(range(0, map_size, stride))[:k]


def deterministic_walk(codes: Sequence[int], map_size: int, k: int = 16) -> Iterator[list[int]]:
    """Yield single-position replacements by a fixed grid of k codes, skipping identities."""
    grid = walk_codes(map_size, k)
    for i, old in enumerate(codes):
        for c in grid:
            if c != old:
                out = list(codes)
                out[i] = c
                yield out
