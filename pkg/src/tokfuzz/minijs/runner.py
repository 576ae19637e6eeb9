"""Run one MiniJS program: parse, evaluate, classify."""

from __future__ import annotations

from dataclasses import dataclass

from ..protocol import Status
from .bugs import INTERNAL_ERROR, AssertionFired
from .interp import DEFAULT_STEP_LIMIT, Interpreter, JSError
from .parser import ParseError, Parser
from .probes import Recorder, site
from ..tokens import LexError, lex

S_LEX_ERROR = site("error", "lex")
S_RUNTIME_ERROR = {k: site("error", f"runtime-{k}") for k in (
    "TypeError", "ReferenceError", "RangeError")}


@dataclass
class Outcome:
    status: Status
    assertion_id: int
    counts: dict[int, int]
    steps: int
    error: str = ""


def run_source(source: str, map_size: int = 1 << 16, step_limit: int = DEFAULT_STEP_LIMIT,
               armed: bool = True, recorder: Recorder | None = None) -> Outcome:
    rec = recorder if recorder is not None else Recorder(map_size)
    rec.reset()
    steps = 0
    try:
        try:
            tokens = lex(source)
        except LexError as exc:
            rec.hit(S_LEX_ERROR)
            return Outcome(Status.PARSE_ERROR, 0, rec.saturated(), 0, str(exc))
        try:
            program = Parser(tokens, rec, armed).parse_program()
        except ParseError as exc:
            return Outcome(Status.PARSE_ERROR, 0, rec.saturated(), 0, str(exc))
        interp = Interpreter(rec, step_limit, armed)
        try:
            interp.run(program)
        except JSError as exc:
            rec.hit(S_RUNTIME_ERROR.get(exc.kind, 0))
            return Outcome(Status.RUNTIME_ERROR, 0, rec.saturated(), interp.steps, str(exc))
        finally:
            steps = interp.steps
        return Outcome(Status.PARSE_OK, 0, rec.saturated(), steps)
    except AssertionFired as exc:
        return Outcome(Status.CRASH, exc.assertion_id, rec.saturated(), steps, str(exc))
    except RecursionError:
        return Outcome(Status.RUNTIME_ERROR, 0, rec.saturated(), steps, "RangeError: recursion")
    except Exception as exc:  # interpreter defect: report it as a crash
        return Outcome(Status.CRASH, INTERNAL_ERROR, rec.saturated(), steps,
                       f"internal error: {type(exc).__name__}: {exc}")
