"""Tokens, the MiniJS lexer, and the fixed literal pools.

Lexing is maximal munch over a single master regex.  Whitespace and
comments are dropped; string literals are kept whole, quotes included.
"""

from __future__ import annotations

import bisect
import re
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class Kind(str, Enum):
    KEYWORD = "keyword"
    PUNCT = "punctuator"
    IDENT = "identifier"
    NUMBER = "number_literal"
    STRING = "string_literal"


NORMAL = "normal"
GLUE = "glue"

KEYWORDS = frozenset([
    "let", "const", "var", "function", "return", "if", "else", "while",
    "for", "true", "false", "null", "new", "class", "delete", "typeof",
])

BUILTINS = frozenset([
    "print", "length", "push", "pop", "shift", "unshift", "Array", "String",
])

# Longest first so the alternation below is maximal munch.
PUNCTUATORS = (
    "===", "!==", "==", "!=", "<=", ">=", "=>", "++", "--", "&&", "||",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", ":", "?",
    "+", "-", "*", "/", "%", "<", ">", "=", "!",
)

# Bare quote characters never come out of the lexer, but may enter a token
# map as hand-added extras; they are rendered without surrounding spaces.
DEFAULT_GLUE = frozenset(['"', "'"])

VARIABLE_POOL: tuple[str, ...] = tuple(f"var{i}" for i in range(1, 16))


def _canonical_numbers() -> tuple[int, ...]:
    values = set()
    for k in range(33):
        values.update((2 ** k - 1, 2 ** k, 2 ** k + 1))
    return tuple(sorted(values))


CANONICAL_NUMBERS: tuple[int, ...] = _canonical_numbers()


class Token(NamedTuple):
    kind: Kind
    text: str
    spacing: str = NORMAL

    def __repr__(self) -> str:
        return f"Token({self.kind.value}, {self.text!r})"


class LexError(ValueError):
    def __init__(self, position: int, message: str = "illegal character"):
        super().__init__(f"{message} at offset {position}")
        self.position = position
        self.reason = message


_MASTER = re.compile(
    r"""
    (?P<ws>[ \t\r\n\f\v]+)
  | (?P<lcomment>//[^\n]*)
  | (?P<bcomment>/\*.*?\*/)
  | (?P<open_comment>/\*)
  | (?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<number>0[xX][0-9a-fA-F]+|[0-9]+(?:\.[0-9]+)?|\.[0-9]+)
  | (?P<string>"(?:[^"\\\n]|\\[^\n])*"|'(?:[^'\\\n]|\\[^\n])*')
  | (?P<open_string>["'])
  | (?P<punct>%s)
    """ % "|".join(re.escape(p) for p in PUNCTUATORS),
    re.VERBOSE | re.DOTALL,
)


_GROUP_KIND = {
    "punct": Kind.PUNCT,
    "number": Kind.NUMBER,
    "string": Kind.STRING,
}
_new_token = tuple.__new__


# Word -> Token for space-separated words that lex to exactly one token
# (False for words that do not).  Decoded inputs are single-space separated,
# so most programs lex from this table alone.
_WORD_CACHE: dict[str, Token | bool] = {}
_WORD_CACHE_MAX = 1 << 17


def _lex_words(source: str) -> list[Token]:
    # Every word before the first miss is one whole token, so the miss starts
    # at a token boundary and the full lexer can resume there.
    cache = _WORD_CACHE
    out = []
    append = out.append
    pos = 0
    for word in source.split(" "):
        tok = cache.get(word)
        if tok is None:
            if not word:
                pos += 1
                continue
            try:
                toks = _lex_full(word, DEFAULT_GLUE)
            except LexError:
                toks = ()
            tok = toks[0] if len(toks) == 1 and toks[0].text == word else False
            if len(cache) >= _WORD_CACHE_MAX:
                cache.clear()
            cache[word] = tok
        if tok is False:
            try:
                out += _lex_full(source[pos:], DEFAULT_GLUE)
            except LexError as exc:
                raise LexError(exc.position + pos, exc.reason) from None
            return out
        append(tok)
        pos += len(word) + 1
    return out


def lex(source: str, glue: Iterable[str] = DEFAULT_GLUE) -> list[Token]:
    """Split *source* into tokens.

    Raises LexError on an illegal character, an unterminated string or an
    unterminated block comment.
    """
    if glue is DEFAULT_GLUE:
        return _lex_words(source)
    return _lex_full(source, frozenset(glue))


def _lex_full(source: str, glue: frozenset[str]) -> list[Token]:
    tokens: list[Token] = []
    append = tokens.append
    keyword, ident, punct = Kind.KEYWORD, Kind.IDENT, Kind.PUNCT
    group_kind = _GROUP_KIND
    keywords = KEYWORDS
    pos = 0
    scan = _MASTER.scanner(source).match
    end = len(source)
    while True:
        m = scan()
        if m is None:
            if pos < end:
                raise LexError(pos)
            return tokens
        group = m.lastgroup
        pos = m.end()
        if group == "ws" or group == "lcomment" or group == "bcomment":
            continue
        text = m.group()
        if group == "ident":
            kind = keyword if text in keywords else ident
        else:
            kind = group_kind.get(group)
            if kind is None:
                raise LexError(m.start(), "unterminated string" if group == "open_string"
                               else "unterminated comment")
            if kind is punct and text in glue:
                append(_new_token(Token, (kind, text, GLUE)))
                continue
        append(_new_token(Token, (kind, text, NORMAL)))


def render(tokens: Sequence[Token]) -> str:
    """Join token texts with single spaces, omitting spaces next to glue tokens."""
    if not tokens:
        return ""
    parts = [tokens[0].text]
    prev_glue = tokens[0].spacing == GLUE
    for tok in tokens[1:]:
        glue = tok.spacing == GLUE
        if not (glue or prev_glue):
            parts.append(" ")
        parts.append(tok.text)
        prev_glue = glue
    return "".join(parts)


def nearest_canonical(n: int) -> int:
    """Closest member of CANONICAL_NUMBERS to *n*; ties go to the smaller value."""
    if n < 0:
        raise ValueError("canonical numbers are non-negative; sign is a separate token")
    pool = CANONICAL_NUMBERS
    i = bisect.bisect_left(pool, n)
    if i == len(pool):
        return pool[-1]
    if pool[i] == n or i == 0:
        return pool[i]
    lo, hi = pool[i - 1], pool[i]
    return lo if n - lo <= hi - n else hi


def number_value(text: str) -> int:
    """Integer part of a number literal, truncated toward zero."""
    if text[:2] in ("0x", "0X"):
        return int(text, 16)
    if "." in text:
        whole = text.split(".", 1)[0]
        return int(whole) if whole else 0
    return int(text)
