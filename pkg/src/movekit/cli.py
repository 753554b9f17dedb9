"""Command-line front door: deterministic trace replay, scene listing,
invariant fuzzing, and the demo web server.

Exit codes: 0 success, 1 assertion failure, 2 golden layout mismatch,
3 usage or parse error.
"""

from __future__ import annotations

import argparse
import difflib
import sys
from pathlib import Path

from .fuzz import fuzz_scene
from .scenes import build_scene, scene_names
from .trace import TraceError, parse_trace, run_trace

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_GOLDEN = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2; we reserve that
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="movekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    replay = sub.add_parser("replay", help="replay a pointer trace against a scene")
    replay.add_argument("--scene", required=True, help="catalog scene name")
    replay.add_argument("--trace", required=True, help="trace file to replay")
    replay.add_argument("--save-layout", help="write the final layout document here")
    replay.add_argument("--golden", help="compare the final layout to this document")

    sub.add_parser("scenes", help="list catalog scene names")

    fuzz = sub.add_parser("fuzz", help="seeded random drags with invariant audits")
    fuzz.add_argument("--scene", default="panels", help="catalog scene name (default: panels)")
    fuzz.add_argument("--steps", type=int, default=1000, help="number of events (default: 1000)")
    fuzz.add_argument("--seed", type=int, default=1, help="PRNG seed (default: 1)")

    serve = sub.add_parser("serve", help="serve the browser demo and its engine endpoint")
    serve.add_argument("--port", type=int, default=8008)
    serve.add_argument("--root", default="frontend", help="static files directory")
    return parser


def _cmd_replay(args) -> int:
    try:
        text = Path(args.trace).read_text()
    except OSError as exc:
        print(f"cannot read trace: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        events = parse_trace(text)
        report = run_trace(args.scene, events)
    except (TraceError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render())
    if args.save_layout:
        Path(args.save_layout).write_text(report.layout)
    if not report.ok:
        return EXIT_ASSERT
    if args.golden:
        try:
            golden = Path(args.golden).read_text()
        except OSError as exc:
            print(f"cannot read golden: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if golden != report.layout:
            diff = difflib.unified_diff(
                golden.splitlines(keepends=True),
                report.layout.splitlines(keepends=True),
                fromfile=args.golden,
                tofile="replayed layout",
            )
            sys.stdout.writelines(diff)
            return EXIT_GOLDEN
    return EXIT_OK


def _cmd_scenes() -> int:
    for name in scene_names():
        print(name)
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    try:
        build_scene(args.scene)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = fuzz_scene(args.scene, args.steps, args.seed)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_ASSERT


def _cmd_serve(args) -> int:
    from .boundary import serve

    serve(args.port, Path(args.root))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "replay":
        return _cmd_replay(args)
    if args.command == "scenes":
        return _cmd_scenes()
    if args.command == "fuzz":
        return _cmd_fuzz(args)
    if args.command == "serve":
        return _cmd_serve(args)
    return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
