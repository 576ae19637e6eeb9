"""
The four planted bugs in MiniJS
===============================

Each planted defect fires its own assertion id.  Below: one trigger per bug,
the same program with the bugs disarmed, and a noisy witness shrunk back down
by the crash minimizer.
"""

from tokfuzz.minijs.bugs import PLANTED_BUGS
from tokfuzz.minijs.runner import run_source
from tokfuzz.protocol import Status
from tokfuzz.tokens import lex, render
from tokfuzz.triage import minimize

for bug in PLANTED_BUGS:
    print(f"{bug.bug_id}  {bug.name:18s} mirrors {bug.mirrors}")

triggers = {
    1: "let var2 = { var1 = 5 } ;",
    2: "function var1 ( var2 ) { const var2 = 1 ; } var1 ( 2 ) ;",
    3: "function var1 ( var2 , var3 ) { return var2 ; } var1 ( 1 ) 1 ;",
    4: "let var1 = [ 1 , 2 ] ; for ( let var2 = 0 ; var2 < 4 ; var2 ++ ) "
       "{ var1 . unshift ( var2 ) ; var1 . shift ( ) ; }",
}

print()
for bug_id, src in triggers.items():
    armed = run_source(src)
    disarmed = run_source(src, armed=False)
    print(f"bug {bug_id}: armed -> {armed.status.label} (assertion {armed.assertion_id}), "
          f"disarmed -> {disarmed.status.label}")

# Bugs 1 and 3 need input a correct parser would reject.  Fixing the one bad
# token gives an ordinary program:
print(run_source("let var2 = { var1 : 5 } ;").status.label)
print(run_source("function var1 ( var2 , var3 ) { return var2 ; } var1 ( 1 ) ;").status.label)

# Minimization works on token lists; statements go first, then single tokens.
noisy = ("let var5 = 3 ; print ( var5 * 2 ) ; let var7 = \"tail\" ; "
         + triggers[4] + " print ( var7 ) ;")
tokens = lex(noisy)


def reproduces(seq):
    out = run_source(render(seq))
    return out.status == Status.CRASH and out.assertion_id == 4


small = minimize(tokens, reproduces, is_boundary=lambda t: t.text == ";")
print(f"\n{len(tokens)} tokens -> {len(small)} tokens")
print(render(small))
