"""
From source text to token codes and back
========================================

One bundled seed goes through the whole preprocessing pipeline, gets mutated
a few times, and is decoded for execution.
"""

import random
from pathlib import Path

import numpy as np

import tokfuzz
from tokfuzz.codec import decode, encode
from tokfuzz.mutator import havoc
from tokfuzz.preproc import build_token_map, prepare_seed, seed_rng
from tokfuzz.tokens import lex, nearest_canonical, render

seed_dir = Path(tokfuzz.__file__).parent / "seeds"
source = (seed_dir / "seed_000.js").read_text()
print(source[:300])

# lex: maximal munch, whitespace and comments dropped
raw = lex(source)
print(len(raw), "tokens, first ten:", [t.text for t in raw[:10]])

# numbers snap to powers of two and their neighbours
for n in (6, 100, 1000, 70000):
    print(n, "->", nearest_canonical(n))

# variable names come from var1..var15; numbers are renumbered
seq = prepare_seed(source, seed_rng(0, "seed_000.js"))
print(render(seq)[:300])

# the token map assigns codes in first-occurrence order
tmap = build_token_map([prepare_seed(p.read_text(), seed_rng(0, p.name))
                        for p in sorted(seed_dir.glob("*.js"))])
codes = encode(seq, tmap)
print(len(tmap), "distinct tokens in the bundled corpus")
print("codes:", np.array(codes[:20], dtype=np.uint16))

# decoding is total: any 16-bit value wraps into the map
print(decode([0, 65535, 7, 40000], tmap))

# a few havoc rounds
rng = random.Random(1)
semicolon = tmap.code_of.get(lex(";")[0])
for i in range(3):
    trail = []
    mutant = havoc(codes, lambda r: codes, len(tmap), semicolon, rng, trail=trail)
    print(f"\n-- mutant {i} ({', '.join(trail)}), {len(mutant) - len(codes):+d} tokens")
    print(decode(mutant, tmap)[:200])
