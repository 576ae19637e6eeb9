"""Seed pre-parser: rename, renumber, build the token map, encode.

Corpus layout written by :func:`preprocess_corpus`::

    <corpus>/tokenmap.txt        TOKMAP v1 <count>, then code<TAB>kind<TAB>text<TAB>spacing
    <corpus>/queue/id_NNNNNN.tok little-endian u16 codes, no header
    <corpus>/seeds_report.txt    rename/renumber audit log
"""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .tokens import (
    BUILTINS, DEFAULT_GLUE, GLUE, NORMAL, VARIABLE_POOL, Kind, LexError, Token,
    lex, nearest_canonical, number_value,
)

log = logging.getLogger(__name__)

MAP_FORMAT = "v1"
MAX_CODES = 1 << 16


class MapOverflow(ValueError):
    pass


class TokenMap:
    """Bijection between tokens and 16-bit codes (a code is the entry index)."""

    def __init__(self, entries: Iterable[Token], version: str = MAP_FORMAT):
        self.entries: tuple[Token, ...] = tuple(entries)
        if len(self.entries) > MAX_CODES:
            raise MapOverflow(f"{len(self.entries)} tokens do not fit in 16-bit codes")
        self.version = version
        self.code_of: dict[Token, int] = {}
        for i, tok in enumerate(self.entries):
            if tok in self.code_of:
                raise ValueError(f"duplicate token map entry {tok!r}")
            self.code_of[tok] = i
        # Decode hot path tables.
        self.texts: tuple[str, ...] = tuple(t.text for t in self.entries)
        self.glue: tuple[bool, ...] = tuple(t.spacing == GLUE for t in self.entries)
        self.has_glue = any(self.glue)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TokenMap) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"TokenMap({len(self.entries)} tokens)"

    def code(self, kind: Kind, text: str) -> int | None:
        """Code of the token with this kind and text, whatever its spacing."""
        for spacing in (NORMAL, GLUE):
            c = self.code_of.get(Token(kind, text, spacing))
            if c is not None:
                return c
        return None

    def dumps(self) -> str:
        lines = [f"TOKMAP {self.version} {len(self.entries)}"]
        for i, tok in enumerate(self.entries):
            lines.append(f"{i}\t{tok.kind.value}\t{_escape(tok.text)}\t{tok.spacing}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, data: str) -> "TokenMap":
        lines = data.splitlines()
        if not lines:
            raise ValueError("empty token map")
        header = lines[0].split()
        if len(header) != 3 or header[0] != "TOKMAP":
            raise ValueError(f"bad token map header {lines[0]!r}")
        if header[1] != MAP_FORMAT:
            raise ValueError(f"unsupported token map version {header[1]!r}")
        count = int(header[2])
        entries = []
        for expected, line in enumerate(lines[1:]):
            code, kind, text, spacing = line.split("\t")
            if int(code) != expected:
                raise ValueError(f"token map codes out of order at line {expected + 2}")
            entries.append(Token(Kind(kind), _unescape(text), spacing))
        if len(entries) != count:
            raise ValueError(f"token map header says {count} tokens, found {len(entries)}")
        return cls(entries, header[1])

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | os.PathLike) -> "TokenMap":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}


def _escape(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def _unescape(text: str) -> str:
    out = []
    it = iter(text)
    for ch in it:
        if ch == "\\":
            nxt = next(it, "")
            if nxt not in _UNESCAPES:
                raise ValueError(f"bad escape in token text {text!r}")
            out.append(_UNESCAPES[nxt])
        else:
            out.append(ch)
    return "".join(out)


def write_codes(path: str | os.PathLike, codes: Sequence[int]) -> None:
    Path(path).write_bytes(np.asarray(codes, dtype="<u2").tobytes())


def read_codes(path: str | os.PathLike) -> list[int]:
    data = Path(path).read_bytes()
    if len(data) % 2:
        data = data[:-1]
    return np.frombuffer(data, dtype="<u2").tolist()


def rename_variables(seq: Sequence[Token], rng: random.Random,
                     renames: dict[str, str] | None = None) -> list[Token]:
    """Map user identifiers onto the fifteen pool names.

    Names are drawn without replacement from a shuffled pool; once all
    fifteen are used a fresh shuffle starts.  Keywords and builtins are kept.
    """
    mapping: dict[str, str] = {} if renames is None else renames
    pool: list[str] = []
    out = []
    for tok in seq:
        if tok.kind is Kind.IDENT and tok.text not in BUILTINS:
            name = mapping.get(tok.text)
            if name is None:
                if not pool:
                    pool = rng.sample(VARIABLE_POOL, len(VARIABLE_POOL))
                name = mapping[tok.text] = pool.pop()
            tok = tok._replace(text=name)
        out.append(tok)
    return out


def renumber(seq: Sequence[Token], changes: list[tuple[str, str]] | None = None) -> list[Token]:
    """Snap every number literal to the nearest canonical value."""
    out = []
    for tok in seq:
        if tok.kind is Kind.NUMBER:
            text = str(nearest_canonical(number_value(tok.text)))
            if changes is not None and text != tok.text:
                changes.append((tok.text, text))
            tok = tok._replace(text=text)
        out.append(tok)
    return out


def build_token_map(seeds: Iterable[Sequence[Token]], extra: Iterable[Token] = ()) -> TokenMap:
    seen: dict[Token, None] = {}
    for seq in seeds:
        for tok in seq:
            seen.setdefault(tok, None)
    for tok in extra:
        seen.setdefault(tok, None)
    if len(seen) > MAX_CODES:
        raise MapOverflow(f"{len(seen)} distinct tokens exceed the 16-bit code space")
    return TokenMap(seen)


def parse_extra_tokens(text: str, glue: Iterable[str] = DEFAULT_GLUE) -> list[Token]:
    """Extra tokens file: one token per line, lexed; bare glue characters allowed."""
    glue = frozenset(glue)
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in glue:
            out.append(Token(Kind.PUNCT, line, GLUE))
        else:
            out.extend(lex(line, glue))
    return out


@dataclass
class SeedAudit:
    name: str
    renames: dict[str, str] = field(default_factory=dict)
    renumbers: list[tuple[str, str]] = field(default_factory=list)
    tokens: int = 0
    error: str | None = None


def prepare_seed(source: str, rng: random.Random, audit: SeedAudit | None = None) -> list[Token]:
    """Lex, rename and renumber one seed (raises LexError)."""
    audit = audit or SeedAudit("<seed>")
    seq = lex(source)
    seq = rename_variables(seq, rng, audit.renames)
    seq = renumber(seq, audit.renumbers)
    audit.tokens = len(seq)
    return seq


class NoSeeds(RuntimeError):
    pass


def seed_rng(rng_seed: int, name: str) -> random.Random:
    return random.Random(f"{rng_seed}/{name}")


def preprocess_corpus(seed_dir: str | os.PathLike, rng_seed: int,
                      corpus_dir: str | os.PathLike | None = None,
                      extra: Iterable[Token] = ()) -> tuple[TokenMap, list[list[int]]]:
    """Turn a directory of seed programs into a token map plus encoded seeds.

    Files are processed in sorted name order; each seed gets its own rng
    stream derived from ``rng_seed`` and its file name, so output does not
    depend on directory listing order.  Unlexable or undecodable files are
    skipped and counted.  Writes the corpus layout when ``corpus_dir`` is given.
    """
    from .codec import encode

    seed_dir = Path(seed_dir)
    files = sorted(p for p in seed_dir.iterdir() if p.is_file())
    seqs: list[list[Token]] = []
    audits: list[SeedAudit] = []
    for path in files:
        audit = SeedAudit(path.name)
        audits.append(audit)
        try:
            source = path.read_bytes().decode("utf-8")
            seq = prepare_seed(source, seed_rng(rng_seed, path.name), audit)
        except (UnicodeDecodeError, LexError) as exc:
            audit.error = str(exc)
            log.warning("skipping seed %s: %s", path.name, exc)
            continue
        if not seq:
            audit.error = "no tokens"
            continue
        seqs.append(seq)
    if not seqs:
        raise NoSeeds(f"no usable seeds in {seed_dir}")

    tmap = build_token_map(seqs, extra)
    encoded = [encode(seq, tmap) for seq in seqs]

    if corpus_dir is not None:
        write_corpus(corpus_dir, tmap, encoded, audits)
    return tmap, encoded


def write_corpus(corpus_dir: str | os.PathLike, tmap: TokenMap,
                 encoded: Sequence[Sequence[int]], audits: Sequence[SeedAudit] = ()) -> None:
    corpus = Path(corpus_dir)
    queue = corpus / "queue"
    queue.mkdir(parents=True, exist_ok=True)
    for stale in queue.glob("id_*.tok"):
        stale.unlink()
    tmap.save(corpus / "tokenmap.txt")
    for i, codes in enumerate(encoded):
        write_codes(queue / f"id_{i:06d}.tok", codes)
    lines = []
    for a in audits:
        if a.error:
            lines.append(f"{a.name}\tSKIPPED\t{a.error}")
            continue
        ren = ",".join(f"{k}->{v}" for k, v in a.renames.items())
        num = ",".join(f"{k}->{v}" for k, v in a.renumbers)
        lines.append(f"{a.name}\ttokens={a.tokens}\trename={ren}\trenumber={num}")
    (corpus / "seeds_report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def skipped_count(corpus_dir: str | os.PathLike) -> int:
    report = Path(corpus_dir) / "seeds_report.txt"
    if not report.exists():
        return 0
    return sum("\tSKIPPED\t" in line for line in report.read_text().splitlines())
