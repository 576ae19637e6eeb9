"""Regenerate the bundled MiniJS seed corpus.

Each seed is a handful of small program fragments (loops, objects, user
functions, array queues) stitched together with its own names, numbers and
string literals.  Every generated seed must parse, run to completion and
stay clear of the planted assertions; anything else is rejected and redrawn.

    python3 tools/make_seeds.py [--out src/tokfuzz/seeds] [--count 100]
"""

import argparse
import random
from pathlib import Path

from tokfuzz.minijs.runner import run_source
from tokfuzz.protocol import Status

NAMES = [
    "total", "count", "items", "queue", "result", "value", "index", "limit", "node",
    "left", "right", "acc", "buf", "name", "label", "point", "size", "step", "key",
    "data", "list", "first", "last", "tmp", "flag", "score", "level", "width", "height",
    "depth", "cache", "entry", "word", "text", "sum", "max", "min", "pos", "mode",
]

# A small vocabulary keeps string literals from swamping the token map.
WORDS = """
alpha beta gamma delta kappa sigma omega red green blue black white apple
cherry lemon river ocean forest island tower engine rocket planet signal token
index value entry ready done empty open
""".split()

NUMBERS = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 17, 20, 25, 31, 32, 33, 42,
           50, 63, 64, 65, 99, 100, 127, 128, 255, 256, 500, 512, 1000, 1023, 1024,
           2048, 4095, 4096, 10000, 65535, 65536, 100000, 1048576, 16777216,
           2147483647, 4294967296, 4294967297]


SMALL = [3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 32, 33]


class Seed:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.pool = rng.sample(NAMES, 16)
        self.lines: list[str] = []

    def name(self) -> str:
        return self.pool.pop()

    def num(self, hi: int | None = None) -> int:
        choices = [n for n in NUMBERS if hi is None or n <= hi]
        return self.rng.choice(choices)

    def word(self) -> str:
        return self.rng.choice(WORDS)

    def emit(self, text: str) -> None:
        self.lines.extend(text.strip("\n").splitlines())


def frag_counter(s: Seed):
    i, n = s.name(), s.name()
    s.emit(f"""
let {n} = {s.num(10)};
for (let {i} = 0; {i} < {s.num(9)}; {i}++) {{
  {n} = {n} + {i} * {s.num(16)};
}}
print({n});
""")


def frag_object_update(s: Seed):
    o, a, b = s.name(), s.name(), s.name()
    s.emit(f"""
let {o} = {{ {a}: {s.num()}, {b}: "{s.word()}" }};
{o}.{a} = {o}.{a} + {s.num(64)};
{o}.{b} = "{s.word()}";
print({o}.{a}, {o}.{b});
""")


def frag_record(s: Seed):
    f, a, b, x, y, t, r = (s.name() for _ in range(7))
    s.emit(f"""
function {f}({a}, {b}) {{
  return {{ {x}: {a}, {y}: {b}, {t}: {a} + {b} }};
}}
let {r} = {f}({s.num(100)}, {s.num(100)});
print({r}.{x}, {r}.{t});
""")


def frag_object_nested(s: Seed):
    o, a, b = s.name(), s.name(), s.name()
    s.emit(f"""
const {o} = {{ {a}: [{s.num()}, {s.num()}, {s.num()}], {b}: {{ "{s.word()}": true }} }};
{o}.{a}[1] = {s.num(100)};
print({o}.{a}.length, typeof {o}.{b});
""")


def frag_function_two(s: Seed):
    f, x, y = s.name(), s.name(), s.name()
    op = s.rng.choice(["+", "*", "-"])
    s.emit(f"""
function {f}({x}, {y}) {{
  return {x} {op} {y};
}}
print({f}({s.num(100)}, {s.num(100)}));
""")


def frag_function_local(s: Seed):
    f, x, t = s.name(), s.name(), s.name()
    s.emit(f"""
function {f}({x}) {{
  let {t} = {x} * {s.num(8)};
  if ({t} > {s.num(100)}) {{
    return {t} - {s.num(16)};
  }}
  return {t};
}}
print({f}({s.num(32)}));
""")


def frag_function_const(s: Seed):
    f, x, c = s.name(), s.name(), s.name()
    s.emit(f"""
function {f}({x}) {{
  const {c} = "{s.word()}";
  return {c} + {x};
}}
print({f}("{s.word()}"));
""")


def frag_optional_param(s: Seed):
    f, x, y = s.name(), s.name(), s.name()
    s.emit(f"""
function {f}({x}, {y}) {{
  if ({y} == null) {{
    {y} = {s.num(16)};
  }}
  return {x} * {y};
}}
print({f}({s.num()}), {f}({s.num()}, {s.num(8)}));
""")


def frag_recursion(s: Seed):
    f, n = s.name(), s.name()
    s.emit(f"""
function {f}({n}) {{
  if ({n} <= 1) {{
    return 1;
  }}
  return {n} * {f}({n} - 1);
}}
print({f}({s.rng.randint(3, 9)}));
""")


def frag_queue_drain(s: Seed):
    q, x = s.name(), s.name()
    s.emit(f"""
let {q} = [{s.num()}, {s.num()}, {s.num()}];
while ({q}.length > 0) {{
  let {x} = {q}.shift();
  print({x});
}}
""")


def frag_queue_fill(s: Seed):
    q, i = s.name(), s.name()
    s.emit(f"""
let {q} = [];
for (let {i} = 0; {i} < {s.rng.randint(2, 6)}; {i}++) {{
  {q}.unshift({i});
}}
print({q}.length, {q}[0]);
""")


def frag_rotate(s: Seed):
    q, i = s.name(), s.name()
    s.emit(f"""
let {q} = ["{s.word()}", "{s.word()}", "{s.word()}"];
for (let {i} = 0; {i} < {s.rng.randint(4, 8)}; {i}++) {{
  {q}.push({q}.shift());
}}
{q}.unshift({q}.pop());
print({q}[0]);
""")


def frag_work_queue(s: Seed):
    # Items below the threshold go back to the front; the rest rotate.
    q, i, x = s.name(), s.name(), s.name()
    vals = [s.rng.choice(SMALL) for _ in range(3)]
    limit = min(vals) + s.rng.randint(0, 1)
    s.emit(f"""
let {q} = [{vals[0]}, {vals[1]}, {vals[2]}];
for (let {i} = 0; {i} < {s.rng.randint(4, 8)}; {i}++) {{
  let {x} = {q}.shift();
  if ({x} < {limit}) {{
    {q}.unshift({x} + 1);
  }} else {{
    {q}.push({x});
  }}
}}
print({q}[0], {q}.length);
""")


def frag_stack(s: Seed):
    st, i = s.name(), s.name()
    s.emit(f"""
let {st} = new Array();
for (let {i} = 0; {i} < {s.num(8)}; {i}++) {{
  {st}.push({i} % {s.rng.randint(2, 5)});
}}
while ({st}.length) {{
  {st}.pop();
}}
""")


def frag_strings(s: Seed):
    a, b = s.name(), s.name()
    s.emit(f"""
var {a} = "{s.word()}";
var {b} = {a} + " " + '{s.word()}';
print({b}.length, String({s.num()}));
""")


def frag_conditional(s: Seed):
    a, b = s.name(), s.name()
    cmp = s.rng.choice(["<", ">", "<=", ">=", "==", "!=", "===", "!=="])
    s.emit(f"""
let {a} = {s.num()};
let {b} = {a} {cmp} {s.num()} ? "{s.word()}" : "{s.word()}";
if ({a} % 2 == 0 && {b} != null) {{
  print({b});
}} else {{
  print(!{a});
}}
""")


def frag_while(s: Seed):
    a = s.name()
    s.emit(f"""
let {a} = {s.num(1024) or 1};
while ({a} > 1) {{
  {a} = {a} / 2;
}}
print({a});
""")


def frag_closure(s: Seed):
    mk, c, f = s.name(), s.name(), s.name()
    s.emit(f"""
function {mk}() {{
  let {c} = {s.num(10)};
  return function () {{
    {c}++;
    return {c};
  }};
}}
const {f} = {mk}();
{f}();
print({f}());
""")


def frag_delete(s: Seed):
    o, a = s.name(), s.name()
    s.emit(f"""
let {o} = {{ {a}: {s.num()}, "{s.word()}": {s.num()} }};
delete {o}.{a};
print(typeof {o}.{a});
""")


def frag_method(s: Seed):
    o, m, v = s.name(), s.name(), s.name()
    s.emit(f"""
let {o} = {{ {v}: {s.num(64)}, {m}: function ({v}) {{ return {v} + 1; }} }};
print({o}.{m}({o}.{v}));
""")


def frag_table(s: Seed):
    t, i = s.name(), s.name()
    words = ", ".join(f'"{w}"' for w in s.rng.sample(WORDS, s.rng.randint(4, 9)))
    s.emit(f"""
const {t} = [{words}];
for (let {i} = 0; {i} < {t}.length; {i}++) {{
  print({i}, {t}[{i}]);
}}
""")


FRAGMENTS = [
    frag_table,
    frag_counter, frag_object_update, frag_record, frag_object_nested, frag_function_two,
    frag_function_local, frag_function_const, frag_optional_param, frag_recursion, frag_queue_drain,
    frag_queue_fill, frag_rotate, frag_work_queue, frag_stack, frag_strings, frag_conditional,
    frag_while, frag_closure, frag_delete, frag_method,
]


def make_seed(rng: random.Random) -> str:
    s = Seed(rng)
    picks = rng.sample(FRAGMENTS, rng.randint(2, 4))
    for frag in picks:
        if len(s.pool) < 7:
            break
        frag(s)
    return "\n".join(s.lines) + "\n"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).parents[1] / "src/tokfuzz/seeds"))
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--rng-seed", type=int, default=2019)
    args = ap.parse_args()
    rng = random.Random(args.rng_seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("seed_*.js"):
        old.unlink()
    n = 0
    rejected = 0
    while n < args.count:
        text = make_seed(rng)
        outcome = run_source(text)
        if outcome.status != Status.PARSE_OK:
            rejected += 1
            continue
        (out / f"seed_{n:03d}.js").write_text(text)
        n += 1
    print(f"wrote {n} seeds to {out} ({rejected} rejected)")


if __name__ == "__main__":
    main()
