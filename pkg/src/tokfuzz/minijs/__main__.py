"""MiniJS command line: run a file, serve the fuzzing protocol, or list bugs."""

from __future__ import annotations

import argparse
import sys

from .bugs import PLANTED_BUGS
from .interp import DEFAULT_STEP_LIMIT
from .runner import run_source


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="minijs", description=__doc__)
    ap.add_argument("file", nargs="?", help="program to run ('-' for stdin)")
    ap.add_argument("--serve", action="store_true", help="speak EXEC/STAT on stdin/stdout")
    ap.add_argument("--list-bugs", action="store_true", help="print planted bug ids and exit")
    ap.add_argument("--disarm", action="store_true", help="turn planted bugs into no-ops")
    ap.add_argument("--map-size", type=int, default=1 << 16)
    ap.add_argument("--step-limit", type=int, default=DEFAULT_STEP_LIMIT)
    ap.add_argument("--keep-alive", action="store_true",
                    help="keep serving after an assertion fires")
    args = ap.parse_args(argv)

    if args.list_bugs:
        for bug in PLANTED_BUGS:
            print(f"{bug.bug_id}\t{bug.name}\t{bug.trigger} [mirrors {bug.mirrors}]")
        return 0
    if args.serve:
        from .server import main_serve
        return main_serve(args.map_size, args.step_limit, not args.disarm, not args.keep_alive)
    if not args.file:
        ap.error("give a program file, --serve or --list-bugs")
    with (sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")) as fh:
        source = fh.read()
    outcome = run_source(source, args.map_size, args.step_limit, not args.disarm)
    print(f"{outcome.status.label} assertion={outcome.assertion_id} edges={len(outcome.counts)} "
          f"steps={outcome.steps}{' ' + outcome.error if outcome.error else ''}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
