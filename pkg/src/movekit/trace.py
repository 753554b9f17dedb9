"""Scripted pointer traces: parse, replay against a catalog scene, assert
geometry, and report deterministically.

Trace format, one event per line (# comments and blank lines ignored):

    down <x> <y> <L|R>
    move <x> <y>
    up
    assert <tag> <field> <value> <tol>

`tag` addresses an element by its scene tag, or a child record by a
dotted path like `plot.s0`; `field` is one of x, y, w, h, angle.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Union

from .geometry import Point
from .mover import PointerButton
from .persistence import LayoutRecord, save_layout, scene_document
from .scene import Scene
from .scenes import build_scene


class TraceError(ValueError):
    """Malformed trace line; carries line and column of the offender."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class TraceDown:
    x: float
    y: float
    button: PointerButton


@dataclass(frozen=True)
class TraceMove:
    x: float
    y: float


@dataclass(frozen=True)
class TraceUp:
    pass


@dataclass(frozen=True)
class TraceAssert:
    tag: str
    field: str
    value: float
    tol: float
    line: int = 0


TraceEvent = Union[TraceDown, TraceMove, TraceUp, TraceAssert]

_FIELDS = ("x", "y", "w", "h", "angle")
_TOKEN_RE = re.compile(r"\S+")


def parse_trace(text: str) -> list[TraceEvent]:
    events: list[TraceEvent] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(stripped)]
        if not tokens:
            continue
        events.append(_parse_event(tokens, lineno))
    return events


def _number(tokens, index, lineno) -> float:
    word, col = tokens[index]
    try:
        v = float(word)
    except ValueError:
        raise TraceError(lineno, col, f"expected a number, got {word!r}") from None
    if not math.isfinite(v):
        raise TraceError(lineno, col, f"non-finite number: {word!r}")
    return v


def _arity(tokens, lineno, n, usage) -> None:
    if len(tokens) == n:
        return
    if len(tokens) > n:
        word, col = tokens[n]          # first surplus token
    else:
        word, col = tokens[-1]
        col += len(word)               # just past the truncated line
    raise TraceError(lineno, col, f"expected '{usage}'")


def _parse_event(tokens, lineno) -> TraceEvent:
    op, col = tokens[0]
    if op == "down":
        _arity(tokens, lineno, 4, "down <x> <y> <L|R>")
        x, y = _number(tokens, 1, lineno), _number(tokens, 2, lineno)
        word, bcol = tokens[3]
        if word not in ("L", "R"):
            raise TraceError(lineno, bcol, f"button must be L or R, got {word!r}")
        return TraceDown(x, y, PointerButton(word))
    if op == "move":
        _arity(tokens, lineno, 3, "move <x> <y>")
        return TraceMove(_number(tokens, 1, lineno), _number(tokens, 2, lineno))
    if op == "up":
        _arity(tokens, lineno, 1, "up")
        return TraceUp()
    if op == "assert":
        _arity(tokens, lineno, 5, "assert <tag> <field> <value> <tol>")
        tag = tokens[1][0]
        fname, fcol = tokens[2]
        if fname not in _FIELDS:
            raise TraceError(lineno, fcol, f"field must be one of {', '.join(_FIELDS)}")
        return TraceAssert(tag, fname, _number(tokens, 3, lineno), _number(tokens, 4, lineno), lineno)
    raise TraceError(lineno, col, f"unknown event {op!r}")


@dataclass
class ReplayReport:
    scene: str
    events: int = 0
    repaints: int = 0
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    layout: str = ""

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        lines = [
            f"scene: {self.scene}",
            f"events: {self.events}",
            f"repaints: {self.repaints}",
            f"asserts: {self.passed} passed, {self.failed} failed",
        ]
        lines.extend(self.failures)
        lines.append("layout:")
        lines.append(self.layout.rstrip("\n"))
        return "\n".join(lines) + "\n"


def _lookup_record(scene: Scene, tag_path: str) -> LayoutRecord:
    parts = tag_path.split(".")
    doc = scene_document(scene)
    rec = doc.record(parts[0])
    if rec is None:
        raise KeyError(f"assert references unknown element tag: {parts[0]!r}")
    if len(parts) == 1:
        return rec
    if len(parts) != 2:
        raise KeyError(f"assert tag path too deep: {tag_path!r}")
    child = rec.child(parts[1])
    if child is None:
        raise KeyError(f"assert references unknown child record: {tag_path!r}")
    return child


def run_trace(scene_name: str, events: list[TraceEvent]) -> ReplayReport:
    """Replay events through catch/move/release on a fresh catalog scene."""
    scene = build_scene(scene_name)
    report = ReplayReport(scene=scene_name)
    engine = scene.engine
    for ev in events:
        report.events += 1
        if isinstance(ev, TraceDown):
            engine.catch(Point(ev.x, ev.y), ev.button)
        elif isinstance(ev, TraceMove):
            if engine.move(Point(ev.x, ev.y)):
                report.repaints += 1
        elif isinstance(ev, TraceUp):
            engine.release()
        elif isinstance(ev, TraceAssert):
            actual = _lookup_record(scene, ev.tag).field_value(ev.field)
            if abs(actual - ev.value) <= ev.tol:
                report.passed += 1
            else:
                report.failed += 1
                report.failures.append(
                    f"assert failed (line {ev.line}): {ev.tag} {ev.field} "
                    f"expected {ev.value!r} +/- {ev.tol!r}, got {actual!r}"
                )
    report.layout = save_layout(scene)
    return report
