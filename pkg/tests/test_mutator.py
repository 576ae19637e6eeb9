import random

import pytest
from hypothesis import given, settings, strategies as st

from tokfuzz import mutator as m
from tokfuzz.bytemut import MAX_INPUT_BYTES, choose_block_len, havoc_bytes, make_byte_mutator, splice_bytes
from tokfuzz.codec import decode, decode_tokens, encode, normalize_code
from tokfuzz.preproc import build_token_map
from tokfuzz.tokens import lex

N = 300
SAMPLES = 10_000
codes_st = st.lists(st.integers(0, 65535), max_size=60)


def sample_inputs(rng, count=SAMPLES, max_len=40):
    return [[rng.randrange(N) for _ in range(rng.randint(1, max_len))] for _ in range(count)]


def test_budget_validation():
    assert m.MutationBudget().max_run == 3
    for bad in (0, 1, 3, 12):
        with pytest.raises(ValueError):
            m.MutationBudget(havoc_stack_max=bad)


def test_insert_run_lengths():
    rng = random.Random(1)
    deltas = {len(m.random_insert(c, N, rng)) - len(c) for c in sample_inputs(rng)}
    assert deltas == {1, 2, 3}


def test_insert_into_empty():
    rng = random.Random(2)
    assert {len(m.random_insert([], N, rng)) for _ in range(200)} == {1, 2, 3}


def test_overwrite_keeps_length_and_run_bound():
    rng = random.Random(3)
    for c in sample_inputs(rng):
        out = m.random_overwrite(c, N, rng)
        assert len(out) == len(c)
        diff = [i for i, (a, b) in enumerate(zip(c, out)) if a != b]
        if diff:
            assert diff[-1] - diff[0] < 3


def test_overwrite_run_of_one_is_single_replacement():
    # while ( bar . x ) -> if ( bar . x ): the run-1 overwrite shape
    rng = random.Random(0)
    c = [0, 1, 2, 3, 4, 5]
    seen = [m.random_overwrite(c, N, rng) for _ in range(500)]
    assert any(sum(a != b for a, b in zip(c, o)) == 1 and o[0] != 0 for o in seen)


def test_replace_length_change_bound():
    rng = random.Random(4)
    deltas = {len(m.random_replace(c, N, rng)) - len(c) for c in sample_inputs(rng)}
    assert max(map(abs, deltas)) <= 2 * 3 - 1
    assert min(deltas) < 0 < max(deltas)


@pytest.mark.parametrize("op", [m.random_overwrite, m.random_replace, m.duplicate_run])
def test_empty_input_is_noop(op):
    with pytest.raises(m.NoOp):
        op([], N, random.Random(0))


def test_delete_never_empties():
    rng = random.Random(5)
    for c in sample_inputs(rng, 2000):
        if len(c) >= 2:
            out = m.delete_run(c, N, rng)
            assert 1 <= len(c) - len(out) <= 3 and out


def test_statement_spans_exclude_semicolons():
    semi = 9
    assert m.statement_spans([1, 2, semi, 3, semi, semi, 4], semi) == [(0, 2), (3, 4), (6, 7)]
    assert m.statement_spans([1, 2, 3], semi) == [(0, 3)]
    assert m.statement_spans([semi, semi], semi) == []


def test_statement_splice_example():
    tmap = build_token_map([lex("a = 1 ; b = 2 ; c = 3")])
    src = [tmap.code_of[t] for t in lex("a = 1 ; b = 2")]
    donor = [tmap.code_of[t] for t in lex("c = 3")]
    semi = tmap.code_of[lex(";")[0]]
    outs = {decode(m.statement_splice(src, donor, semi, random.Random(s)), tmap) for s in range(40)}
    assert outs == {"c = 3 ; b = 2", "a = 1 ; c = 3"}


def test_splice_preserves_tokens_outside_span():
    rng = random.Random(6)
    semi = 0
    for _ in range(2000):
        src = [rng.randrange(4) for _ in range(rng.randint(1, 20))]
        donor = [rng.randrange(4) for _ in range(rng.randint(1, 20))]
        try:
            out = m.statement_splice(src, donor, semi, rng)
        except m.NoOp:
            continue
        spans = m.statement_spans(src, semi)
        assert any(out[:a] == src[:a] and out[len(out) - (len(src) - b):] == src[b:]
                   for a, b in spans)


def test_splice_without_statements_is_noop():
    with pytest.raises(m.NoOp):
        m.statement_splice([0, 0], [1], 0, random.Random(0))


def test_havoc_trail_and_bounds():
    rng = random.Random(7)
    used = set()
    for c in sample_inputs(rng, 3000):
        trail = []
        out = m.havoc(c, lambda r: [1, 0, 2], N, 0, rng, m.MutationBudget(3, 4), trail)
        assert 1 <= len(trail) <= 4 or not trail
        assert out and len(out) <= m.MAX_INPUT_TOKENS
        assert all(0 <= x < N or x in c for x in out)
        used.update(trail)
    assert used == set(m.HAVOC_OPS)


def test_havoc_stack_of_one_overwrite_matches_strategy():
    budget = m.MutationBudget(3, 2)
    for seed in range(200):
        trail = []
        out = m.havoc([5, 6, 7], lambda r: [1], N, None, random.Random(seed), budget, trail)
        if trail == ["overwrite"]:
            rng = random.Random(seed)
            rng.randint(1, 2)
            rng.randrange(len(m.HAVOC_OPS))
            assert out == m.random_overwrite([5, 6, 7], N, rng)
            return
    pytest.fail("no single-overwrite stack drawn")


def test_havoc_is_deterministic_per_seed():
    c = list(range(30))
    a = m.havoc(c, lambda r: [1, 2], N, 3, random.Random(11))
    b = m.havoc(c, lambda r: [1, 2], N, 3, random.Random(11))
    assert a == b


def test_walk_single_token_map_four():
    assert list(m.deterministic_walk([0], 4, 4)) == [[1], [2], [3]]


def test_walk_length_and_single_difference():
    codes = [0, 17, 5, 299]
    out = list(m.deterministic_walk(codes, N, 16))
    grid = m.walk_codes(N, 16)
    assert len(grid) == 16 and grid[1] == 19
    assert len(out) == 16 * len(codes) - sum(c in grid for c in codes)
    assert all(sum(a != b for a, b in zip(codes, o)) == 1 for o in out)


def test_walk_k_one():
    assert len(list(m.deterministic_walk([3, 4, 5], N, 1))) <= 3


# -- codec ------------------------------------------------------------------------


def test_encode_decode_example():
    tmap = build_token_map([lex("let var1 = 1 ;")])
    codes = encode(lex("let var1 = 1 ;"), tmap)
    assert codes == [0, 1, 2, 3, 4]
    assert decode(codes, tmap) == "let var1 = 1 ;"
    assert decode([5, 6], tmap) == "let var1"
    assert normalize_code(65535, tmap) == 65535 % 5


@given(codes_st)
def test_decode_is_total(codes):
    tmap = build_token_map([lex("while ( a . b ) { c = 'x' ; }")])
    text = decode(codes, tmap)
    assert lex(text) == decode_tokens(codes, tmap)


# -- byte baseline --------------------------------------------------------------------


def test_block_len_limits():
    rng = random.Random(0)
    for limit in (1, 5, 40, 2000):
        for cycle in (1, 2, 5):
            assert all(1 <= choose_block_len(limit, rng, cycle) <= limit for _ in range(300))


@settings(max_examples=200)
@given(st.binary(max_size=200), st.integers(0, 2 ** 32))
def test_byte_havoc_bounds(data, seed):
    out = havoc_bytes(data, [b"let", b"="], random.Random(seed))
    assert isinstance(out, bytes) and len(out) <= MAX_INPUT_BYTES


def test_byte_havoc_uses_dictionary():
    rng = random.Random(1)
    hits = sum(b"unshift" in havoc_bytes(b"x = 1 ;" * 4, [b"unshift"], rng) for _ in range(500))
    assert hits > 0


def test_splice_bytes():
    assert splice_bytes(b"aaaa", b"aaaa", random.Random(0)) is None
    out = splice_bytes(b"abcdefgh", b"abXdeYgh", random.Random(0))
    assert out.startswith(b"ab") and out.endswith(b"gh")


def test_byte_mutator_never_empty():
    mut = make_byte_mutator([b"a"], lambda r: b"donor text", 0.5)
    rng = random.Random(2)
    assert all(mut(b"x", rng) for _ in range(500))
