import random

import pytest
from hypothesis import given, strategies as st

from tokfuzz.tokens import (
    CANONICAL_NUMBERS, GLUE, Kind, LexError, Token, lex, nearest_canonical, number_value,
    render,
)


def kinds(src):
    return [(t.kind, t.text) for t in lex(src)]


def linear_nearest(n, pool):
    return min(pool, key=lambda c: (abs(c - n), c))


ORACLE_POOL = sorted({v for k in range(33) for v in (2 ** k - 1, 2 ** k, 2 ** k + 1)})


def test_lex_declaration():
    assert kinds("let var1 = 1 ;") == [
        (Kind.KEYWORD, "let"), (Kind.IDENT, "var1"), (Kind.PUNCT, "="),
        (Kind.NUMBER, "1"), (Kind.PUNCT, ";"),
    ]


def test_maximal_munch():
    assert [t.text for t in lex("a===b!==c=>d++")] == ["a", "===", "b", "!==", "c", "=>", "d", "++"]
    assert [t.text for t in lex("a= =b")] == ["a", "=", "=", "b"]


def test_strings_are_atomic():
    toks = lex("print(\"a b\", 'it\\'s')")
    assert toks[2] == Token(Kind.STRING, '"a b"')
    assert toks[4] == Token(Kind.STRING, "'it\\'s'")


def test_comments_and_whitespace_skipped():
    assert [t.text for t in lex("a // note\n/* block\n */ b\t\n")] == ["a", "b"]


def test_builtins_lex_as_identifiers():
    assert lex("push")[0].kind is Kind.IDENT


@pytest.mark.parametrize("src,pos", [("a @ b", 2), ('x = "abc', 4), ("a /* open", 2), ("#", 0)])
def test_lex_errors_carry_position(src, pos):
    with pytest.raises(LexError) as info:
        lex(src)
    assert info.value.position == pos


def test_render_spacing_and_glue():
    toks = [Token(Kind.IDENT, "a"), Token(Kind.PUNCT, '"', GLUE), Token(Kind.IDENT, "b"),
            Token(Kind.PUNCT, '"', GLUE), Token(Kind.PUNCT, ";")]
    assert render(toks) == 'a"b";'
    assert render(toks[:1] + toks[4:]) == "a ;"
    assert render([]) == ""


def test_glue_tokens_have_no_spaces():
    toks = [Token(Kind.IDENT, "a"), Token(Kind.PUNCT, '"', GLUE), Token(Kind.IDENT, "b")]
    assert render(toks) == 'a"b'


def test_pool_matches_oracle_construction():
    # 1, 2 and 3 each come from two different k, so the pool has 96 values.
    assert list(CANONICAL_NUMBERS) == ORACLE_POOL
    assert len(CANONICAL_NUMBERS) == 96


@pytest.mark.parametrize("n,want", [(0, 0), (6, 5), (10, 9), (12, 9), (13, 15), (24, 17),
                                    (1000, 1023), (2 ** 40, 2 ** 32 + 1)])
def test_nearest_canonical_examples(n, want):
    assert nearest_canonical(n) == want


def test_nearest_canonical_agrees_with_linear_scan():
    rng = random.Random(5)
    samples = [rng.randint(0, 2 ** 33) for _ in range(10_000)]
    # Exact midpoints between neighbours, where the smaller value must win.
    samples += [(a + b) // 2 for a, b in zip(ORACLE_POOL, ORACLE_POOL[1:]) if (a + b) % 2 == 0]
    mismatches = [n for n in samples if nearest_canonical(n) != linear_nearest(n, ORACLE_POOL)]
    assert mismatches == []


def test_nearest_canonical_rejects_negative():
    with pytest.raises(ValueError):
        nearest_canonical(-1)


@pytest.mark.parametrize("text,value", [("42", 42), ("0x1F", 31), ("3.75", 3), (".5", 0)])
def test_number_value(text, value):
    assert number_value(text) == value


word = st.sampled_from(["let", "var1", "x_2", "=", "==", "(", ")", "{", "}", ";", "7",
                        "0x10", "'s'", '"t u"', "+", "++", ".", "print"])


@given(st.lists(word, max_size=40))
def test_render_then_lex_is_identity(words):
    toks = lex(" ".join(words))
    assert lex(render(toks)) == toks


@given(st.text(alphabet=st.sampled_from(list("ab1 =;\"'/*\n\t.x(")), max_size=30))
def test_lex_is_total_over_error_or_tokens(src):
    try:
        toks = lex(src)
    except LexError as exc:
        assert 0 <= exc.position <= len(src)
    else:
        assert all(t.text for t in toks)
