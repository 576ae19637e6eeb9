"""Encode token sequences to code arrays and decode them back to source text."""

from __future__ import annotations

from typing import Sequence

from .preproc import TokenMap
from .tokens import Token


class UnknownToken(KeyError):
    pass


def encode(seq: Sequence[Token], tmap: TokenMap) -> list[int]:
    code_of = tmap.code_of
    try:
        return [code_of[tok] for tok in seq]
    except KeyError as exc:
        raise UnknownToken(exc.args[0]) from None


def normalize_code(code: int, tmap: TokenMap) -> int:
    return code % len(tmap.entries)


def decode_tokens(codes: Sequence[int], tmap: TokenMap) -> list[Token]:
    entries = tmap.entries
    n = len(entries)
    return [entries[c % n] for c in codes]


def decode(codes: Sequence[int], tmap: TokenMap) -> str:
    """Render codes as program text.  Total: any code wraps into the map."""
    texts = tmap.texts
    n = len(texts)
    if not tmap.has_glue:
        return " ".join([texts[c % n] for c in codes])
    glue = tmap.glue
    parts = []
    prev_glue = True
    for c in codes:
        c %= n
        g = glue[c]
        if not (g or prev_glue):
            parts.append(" ")
        parts.append(texts[c])
        prev_glue = g
    return "".join(parts)
