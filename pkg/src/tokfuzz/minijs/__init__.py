"""MiniJS: a small instrumented JavaScript-subset interpreter with planted bugs."""

from .bugs import PLANTED_BUGS, AssertionFired
from .parser import ParseError, parse
from .runner import Outcome, run_source

__all__ = ["PLANTED_BUGS", "AssertionFired", "Outcome", "ParseError", "parse", "run_source"]
