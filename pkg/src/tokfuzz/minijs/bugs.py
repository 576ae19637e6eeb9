"""Planted defects.  Each fires a distinct assertion id."""

from __future__ import annotations

from dataclasses import dataclass

BUG_SYNTAX_ASSIGN = 1
BUG_CONST_REDEF = 2
BUG_TRAILING_EXPR = 3
BUG_GC_SHIFT = 4
INTERNAL_ERROR = 0xFFFF

# Consecutive alternating shift/unshift calls on one array that trip the
# free-list check.
GC_SHIFT_THRESHOLD = 8


@dataclass(frozen=True)
class PlantedBug:
    bug_id: int
    name: str
    trigger: str
    mirrors: str


PLANTED_BUGS = (
    PlantedBug(BUG_SYNTAX_ASSIGN, "BUG_SYNTAX_ASSIGN",
               "object literal property written 'name = value' is accepted with a corrupt "
               "type tag; storing the member when the object is created trips the tag check",
               "CVE-2017-8729 (Edge parser)"),
    PlantedBug(BUG_CONST_REDEF, "BUG_CONST_REDEF",
               "'const' redeclaring an existing binding at function-body level is not "
               "rejected and miscounts frame slots; calling the function trips the slot check",
               "Chromium issue 800032 (V8)"),
    PlantedBug(BUG_TRAILING_EXPR, "BUG_TRAILING_EXPR",
               "a number literal directly after a call's ')' is folded into the call and "
               "shifts its argument-slot index; binding a parameter at that slot trips the "
               "index bound check",
               "V8 array-index parser bug (number after super(1.1))"),
    PlantedBug(BUG_GC_SHIFT, "BUG_GC_SHIFT",
               f"{GC_SHIFT_THRESHOLD} or more alternating shift/unshift calls on one array "
               "trip the free-list consistency check",
               "V8 garbage-collector debug check (repeated shift/unshift)"),
)

BUGS_BY_ID = {b.bug_id: b for b in PLANTED_BUGS}


class AssertionFired(Exception):
    """A debug check failed inside the interpreter."""

    def __init__(self, assertion_id: int, detail: str = ""):
        super().__init__(f"assertion {assertion_id} failed{': ' + detail if detail else ''}")
        self.assertion_id = assertion_id
