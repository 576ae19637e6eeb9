import random
import subprocess
import sys

import pytest

from tokfuzz import mutator
from tokfuzz.codec import decode
from tokfuzz.minijs import parser
from tokfuzz.minijs.bugs import (
    BUG_CONST_REDEF, BUG_GC_SHIFT, BUG_SYNTAX_ASSIGN, BUG_TRAILING_EXPR, PLANTED_BUGS,
)
from tokfuzz.minijs.probes import Recorder, site
from tokfuzz.minijs.runner import run_source
from tokfuzz.protocol import Status
from tokfuzz.tokens import Kind

WITNESSES = {
    BUG_SYNTAX_ASSIGN: "let var2 = { var1 = 5 } ;",
    BUG_CONST_REDEF: "function var1 ( var2 ) { const var2 = 1 ; } var1 ( 2 ) ;",
    BUG_TRAILING_EXPR: "function var1 ( var2 , var3 ) { return var2 ; } var1 ( 1 ) 1 ;",
    BUG_GC_SHIFT: "let var1 = [ 1 , 2 ] ; for ( let var2 = 0 ; var2 < 4 ; var2 ++ ) "
                  "{ var1 . unshift ( var2 ) ; var1 . shift ( ) ; }",
}


def status(src, **kw):
    return run_source(src, **kw).status


@pytest.mark.parametrize("bug_id,src", sorted(WITNESSES.items()))
def test_witness_fires_its_assertion(bug_id, src):
    out = run_source(src)
    assert (out.status, out.assertion_id) == (Status.CRASH, bug_id)


@pytest.mark.parametrize("bug_id,src", sorted(WITNESSES.items()))
def test_disarmed_witness_does_not_crash(bug_id, src):
    assert run_source(src, armed=False).status != Status.CRASH


def test_near_misses_stay_clean():
    # One step short of each trigger.
    assert status("let var2 = { var1 : 5 } ; var2 . var1 = 7 ;") == Status.PARSE_OK
    # Parsed but never evaluated.
    assert status("function var3 ( ) { return { var1 = 5 } ; } print ( 1 ) ;") == Status.PARSE_OK
    assert status("function var1 ( var2 ) { let var3 = 1 ; } var1 ( 2 ) ;") == Status.PARSE_OK
    assert status("function var1 ( var2 ) { return var2 ; } var1 ( 1 ) 1 ;") == Status.PARSE_OK
    seven = "let var1 = [ ] ; " + "var1 . unshift ( 1 ) ; var1 . shift ( ) ; " * 3 + \
        "var1 . unshift ( 1 ) ;"
    assert status(seven) == Status.PARSE_OK
    assert status(seven + " var1 . shift ( ) ;") == Status.CRASH


def test_basic_statuses():
    assert status("let var1 = 1 ;") == Status.PARSE_OK
    assert status("while while") == Status.PARSE_ERROR
    assert status("let var1 = @ ;") == Status.PARSE_ERROR
    assert status("var1 ( ) ;") == Status.RUNTIME_ERROR
    assert status("while ( 1 ) { }") == Status.RUNTIME_ERROR
    assert status("return 1 ;") == Status.PARSE_ERROR
    assert status("let var1 = 1 ; let var1 = 2 ;") == Status.PARSE_ERROR
    assert status("class var1 { }") == Status.PARSE_ERROR


@pytest.mark.parametrize("head", ["while ( 0 )", "if ( 1 )", "if ( 0 ) ; else", "for ( ; 0 ; )"])
def test_function_declaration_needs_a_statement_list(head):
    # Found by a campaign: this used to reach the interpreter and die inside it.
    assert status(f"{head} function var1 ( ) {{ }}") == Status.PARSE_ERROR
    assert status(f"{head} {{ function var1 ( ) {{ }} }}") == Status.PARSE_OK


def test_step_limit_is_configurable():
    src = "let var1 = 0 ; while ( var1 < 3000 ) { var1 ++ ; }"
    assert status(src, step_limit=1_000_000) == Status.PARSE_OK
    assert status(src, step_limit=100) == Status.RUNTIME_ERROR


def test_semantics():
    src = ("let var1 = [ 1 , 2 , 3 ] ; var1 . push ( 4 ) ; let var2 = 0 ; "
           "for ( let var3 = 0 ; var3 < var1 . length ; var3 ++ ) { var2 = var2 + var1 [ var3 ] ; } "
           "if ( var2 !== 10 ) { null . x ; }")
    assert status(src) == Status.PARSE_OK
    assert status(src.replace("10", "11")) == Status.RUNTIME_ERROR


def test_deep_nesting_is_a_parse_error_not_a_crash():
    assert status("(" * 5000 + "1" + ")" * 5000 + ";") == Status.PARSE_ERROR
    assert status("function var1 ( ) { return var1 ( ) ; } var1 ( ) ;") == Status.RUNTIME_ERROR


def test_parse_error_carries_position_and_expectation():
    with pytest.raises(parser.ParseError) as info:
        parser.parse("let = 1 ;")
    assert info.value.position == 1 and info.value.expected


def test_probe_sites_are_stable_hashes():
    assert site("stmt", "while") == site("stmt", "while")
    assert site("stmt", "while") != site("stmt", "if")


def test_execution_is_deterministic():
    src = WITNESSES[BUG_GC_SHIFT].replace("4", "3")
    a, b = run_source(src), run_source(src)
    assert (a.status, a.counts, a.steps) == (b.status, b.counts, b.steps)
    assert a.counts


def test_parse_error_trace_only_has_parser_probes():
    out = run_source("let var1 = ;")
    assert out.status == Status.PARSE_ERROR and out.steps == 0 and out.counts


def test_recorder_edges():
    rec = Recorder(1 << 16)
    rec.hit(10)
    rec.hit(10)
    assert rec.counts == {10: 1, (5 ^ 10): 1}


def test_bundled_seeds_are_clean(bundled):
    tmap, encoded = bundled
    outcomes = [run_source(decode(c, tmap)).status for c in encoded]
    assert set(outcomes) == {Status.PARSE_OK}


def test_disarmed_target_never_crashes(bundled):
    """Bugs compiled out: token havoc over the seeds must never produce a crash."""
    tmap, encoded = bundled
    semi = tmap.code(Kind.PUNCT, ";")
    rng = random.Random(99)
    crashes = []
    for i in range(3000):
        seed = encoded[rng.randrange(len(encoded))]
        mutant = mutator.havoc(seed, lambda r: encoded[r.randrange(len(encoded))],
                               len(tmap), semi, rng)
        text = decode(mutant, tmap)
        out = run_source(text, armed=False)
        if out.status == Status.CRASH:
            crashes.append((text, out.error))
    for src in WITNESSES.values():
        if run_source(src, armed=False).status == Status.CRASH:
            crashes.append((src, "witness"))
    assert crashes == []


def test_cli_list_bugs():
    out = subprocess.run([sys.executable, "-m", "tokfuzz.minijs", "--list-bugs"],
                         capture_output=True, text=True, check=True).stdout
    assert [int(line.split("\t")[0]) for line in out.splitlines()] == [b.bug_id for b in PLANTED_BUGS]


def test_cli_runs_a_file(tmp_path):
    f = tmp_path / "w.js"
    f.write_text(WITNESSES[BUG_TRAILING_EXPR])
    out = subprocess.run([sys.executable, "-m", "tokfuzz.minijs", str(f)],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("crash assertion=3")
    out = subprocess.run([sys.executable, "-m", "tokfuzz.minijs", "--disarm", str(f)],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("parse_error")
